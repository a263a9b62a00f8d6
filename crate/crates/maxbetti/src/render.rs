//! Plain-text rendering.

use std::fmt::Display;

use maxbetti_core::BettiTable;

/// `(a, b, c)`.
pub fn tuple<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn list<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `C(t+2,3) + C(t-4,2) + C(t-9,1)` for the b-list in `n` variables.
pub fn binomial_form(b: &[u64], n: usize) -> String {
    let terms: Vec<String> = b
        .iter()
        .enumerate()
        .map(|(k, &bi)| {
            let d = n - (k + 1);
            let shift = d as i64 - bi as i64;
            match shift {
                0 => format!("C(t,{d})"),
                s if s > 0 => format!("C(t+{s},{d})"),
                s => format!("C(t{s},{d})"),
            }
        })
        .collect();
    terms.join(" + ")
}

/// Betti diagram with columns `i` and rows `j - i`, zeros as `.`.
pub fn betti_diagram(table: &BettiTable) -> String {
    let cols = table.totals().len();
    if cols == 0 {
        return "(zero table)\n".to_string();
    }
    let rows: Vec<u64> = {
        let mut r: Vec<u64> = table.graded().keys().map(|&(i, j)| j - i as u64).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let (lo, hi) = (rows[0], rows[rows.len() - 1]);
    let mut lines: Vec<(String, Vec<String>)> = vec![
        (String::new(), (0..cols).map(|i| i.to_string()).collect()),
        ("total:".to_string(), table.totals().iter().map(ToString::to_string).collect()),
    ];
    for r in lo..=hi {
        let cells = (0..cols)
            .map(|i| {
                let b = table.get(i, r + i as u64);
                if b == Default::default() {
                    ".".to_string()
                } else {
                    b.to_string()
                }
            })
            .collect();
        lines.push((format!("{r}:"), cells));
    }
    let label = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| lines.iter().map(|(_, c)| c[i].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for (l, cells) in &lines {
        out.push_str(&format!("{l:>label$}"));
        for (c, w) in cells.iter().zip(&widths) {
            out.push_str(&format!(" {c:>w$}"));
        }
        out.push('\n');
    }
    out
}
