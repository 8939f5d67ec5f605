//! Plain-text rendering of a report.

use std::fmt::Write;

use crate::report::{render_l_poly, Expansion, Pair, ReportDoc, SeriesName, StratumRow};

fn vec_text(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn rays_text(rays: &[Vec<i64>]) -> String {
    rays.iter().map(|r| vec_text(r)).collect::<Vec<_>>().join(" ")
}

fn pairs_text(pairs: &[Pair]) -> String {
    let parts: Vec<String> = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn series_label(n: SeriesName) -> &'static str {
    match n {
        SeriesName::Arithmetic => "arithmetic",
        SeriesName::Geometric => "geometric",
        SeriesName::Difference => "arithmetic - geometric",
        SeriesName::Normal => "normal-case local",
        SeriesName::Global => "global",
        SeriesName::Oracle => "brute force",
    }
}

/// Aligned stratum table: level, rays, `l`, `q`, interior flag, pole pairs.
pub fn strata_table(rows: &[StratumRow]) -> String {
    let header = ["j", "rays", "l", "q", "D", "poles"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
            [
                r.j.to_string(),
                rays_text(&r.rays),
                if r.empty { "empty".into() } else { opt(r.l.map(|l| l.to_string())) },
                opt(r.q.clone()),
                opt(r.in_d.map(|b| if b { "y" } else { "n" }.to_string())),
                if r.empty { String::new() } else { pairs_text(&r.poles) },
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, row: &[&str]| {
        let mut s = String::new();
        for (k, c) in row.iter().enumerate() {
            if k + 1 == row.len() {
                s.push_str(c);
            } else {
                let pad = width[k] - c.chars().count();
                s.push_str(c);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut out, &header);
    for row in &cells {
        let r: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&mut out, &r);
    }
    out
}

fn expansion_text(e: &Expansion) -> String {
    let mut out = String::new();
    for s in 0..=e.order {
        let terms: Vec<(i64, &str)> =
            e.terms.iter().filter(|t| t.1 == s).map(|(l, _, c)| (*l, c.as_str())).collect();
        let _ = writeln!(out, "    T^{s}: {}", render_l_poly(&terms));
    }
    out
}

pub fn render(doc: &ReportDoc) -> String {
    let mut out = String::new();
    let gens: Vec<String> = doc.input.generators.iter().map(|g| vec_text(g)).collect();
    let _ = writeln!(out, "{} {}", doc.tool.name, doc.tool.version);
    let _ = writeln!(out, "semigroup in Z^{}: {}", doc.input.lattice_rank, gens.join(" "));
    if let Some(rows) = &doc.strata {
        out.push_str("\nstrata\n");
        out.push_str(&strata_table(rows));
    }
    if let Some(inv) = &doc.invariants {
        out.push('\n');
        let _ = writeln!(out, "q(Lambda) = {}", inv.q);
        if let Some(q) = &inv.q_local {
            let _ = writeln!(out, "q_Lambda  = {q}");
        }
        let _ = writeln!(out, "B_ar(Lambda) = {}", pairs_text(&inv.poles));
        if let Some(p) = &inv.local_poles {
            let _ = writeln!(out, "B_ar,Lambda  = {}", pairs_text(p));
        }
    }
    if let Some(faces) = &doc.faces {
        out.push_str("\nfaces\n");
        for f in faces {
            let _ = writeln!(
                out,
                "  dim {}  rays [{}]  q = {}  denominator {}",
                f.dim,
                rays_text(&f.rays),
                f.q,
                pairs_text(&f.arithmetic.denominator)
            );
        }
    }
    for e in &doc.series {
        let _ = writeln!(out, "\n{} series", series_label(e.name));
        if let Some(f) = &e.irredundant {
            let _ = writeln!(out, "  irredundant: {}", f.text);
        }
        if let Some(f) = &e.raw {
            let _ = writeln!(out, "  denominator before cancellation: {}", pairs_text(&f.denominator));
        }
        if let Some(x) = &e.expansion {
            let _ = writeln!(out, "  expansion to T^{}:", x.order);
            out.push_str(&expansion_text(x));
        }
    }
    if let Some(n) = &doc.nicaise {
        out.push('\n');
        if n.holds {
            let _ = writeln!(out, "vertex criterion holds ({} vertices certified)", n.witnesses.len());
            for w in &n.witnesses {
                let _ = writeln!(out, "  l = {} vertex {} = sum of generators {:?}", w.l, vec_text(&w.vertex), w.subset);
            }
        } else if let Some(f) = &n.failure {
            let _ = writeln!(out, "vertex criterion fails: l = {} vertex {}", f.l, vec_text(&f.vertex));
        }
    }
    let _ = writeln!(out, "\nsha256 {}", doc.content_hash);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_columns() {
        let rows = vec![
            StratumRow {
                j: 1,
                rays: vec![vec![2, 5], vec![3, 5]],
                empty: false,
                l: Some(1),
                q: Some("5".into()),
                in_d: Some(true),
                tau_rays: None,
                poles: vec![(0, 10)],
                witness: None,
            },
            StratumRow {
                j: 2,
                rays: vec![vec![1, 0]],
                empty: true,
                l: None,
                q: None,
                in_d: None,
                tau_rays: None,
                poles: vec![],
                witness: None,
            },
        ];
        let t = strata_table(&rows);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1], "1  (2,5) (3,5)  1      5  y  {(0,10)}");
        assert_eq!(lines[2], "2  (1,0)        empty  -  -");
        assert_eq!(lines[0].find("rays"), lines[1].find("(2,5)"));
    }
}
