use genus_core::exactpoly::UniPoly;
use genus_core::transfer::{StratifiedDist, TransferMatrix};
use num_bigint::Sign;
use serde_json::{json, Value};

/// `2 + 38x + 24x^{2}`
pub fn latex_poly(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.sign() == Sign::NoSign {
            continue;
        }
        let negative = c.sign() == Sign::Minus;
        let mag = c.magnitude().to_string();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{{{k}}}"),
        };
        if k == 0 || mag != "1" {
            out.push_str(&mag);
        }
        out.push_str(&var);
    }
    out
}

pub fn poly_json(n: usize, p: &UniPoly) -> Value {
    json!({ "n": n, "coeffs": p })
}

pub fn stratified_json(n: usize, d: &StratifiedDist) -> Value {
    json!({
        "n": n,
        "coeffs": d.total(),
        "types": d.types,
        "stratified": d.entries.entries(),
    })
}

pub fn latex_table(rows: &[UniPoly]) -> String {
    let mut out = String::from("\\begin{tabular}{|c|l|}\n\\hline\n$n$ & $\\alpha(D_n,x)$ \\\\\n\\hline\n");
    for (i, p) in rows.iter().enumerate() {
        out.push_str(&format!("{} & ${}$ \\\\\n", i + 1, latex_poly(p)));
    }
    out.push_str("\\hline\n\\end{tabular}");
    out
}

pub fn matrix_text(m: &TransferMatrix, initial: &[UniPoly]) -> String {
    let mut out = format!("types: {}\n", m.types.join(" "));
    for row in m.q.render_rows('Y') {
        out.push_str(&row);
        out.push('\n');
    }
    let init: Vec<String> = initial.iter().map(|p| p.compact('Y')).collect();
    out.push_str(&format!("initial: {}", init.join(" ")));
    out
}

pub fn matrix_json(m: &TransferMatrix, initial: &[UniPoly]) -> Value {
    let rows: Vec<Vec<&UniPoly>> = (0..m.q.rows()).map(|r| m.q.row(r).iter().collect()).collect();
    json!({ "types": m.types, "matrix": rows, "initial": initial })
}

pub fn matrix_latex(m: &TransferMatrix) -> String {
    let k = m.q.cols();
    let mut out = format!("\\begin{{array}}{{{}}}\n", "c".repeat(k));
    for r in 0..m.q.rows() {
        let cells: Vec<String> = m.q.row(r).iter().map(|p| p.compact('Y')).collect();
        out.push_str(&format!("  {} \\\\\n", cells.join(" & ")));
    }
    out.push_str("\\end{array}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_forms() {
        let p: UniPoly = "2 + 38x + 24x^2".parse().unwrap();
        assert_eq!(latex_poly(&p), "2 + 38x + 24x^{2}");
        let q: UniPoly = "x - 3x^3".parse().unwrap();
        assert_eq!(latex_poly(&q), "x - 3x^{3}");
        assert_eq!(latex_poly(&UniPoly::zero()), "0");
    }
}
