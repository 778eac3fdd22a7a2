//! The four 8×8 matrices printed for length 4, sign 0, as LaTeX rows.

use dyckd::PolyQ;

pub const BASIS: [&str; 8] = ["UUUU", "UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU", "DDDD"];

pub const M: &str = r"
1 & 0 & 0 & 0 & 0 & 0 & 0 & 0\\
-q & 1  & 0 & 0 & 0 & 0 & 0 & 0 \\
0 & -q & 1 & 0 & 0 & 0 & 0 & 0 \\
0 & 0 & -q & 1 & 0 & 0 & 0 & 0 \\
0 & 0 & -q & 0 & 1 & 0 & 0 & 0 \\
0 & -q^{2} & q^{2} & -q & -q & 1 & 0 & 0 \\
-q^{3} & q^{3} & 0 & 0 & 0 & -q & 1 & 0 \\
q^{4} & 0 & 0 & 0 & 0 & 0 & -q &  1
";

pub const MINV: &str = r"
1 & 0 & 0 & 0 & 0 & 0 & 0 & 0\\
q & 1  & 0 & 0 & 0 & 0 & 0 & 0 \\
q^{2} & q & 1 & 0 & 0 & 0 & 0 & 0 \\
q^{3} & q^{2} & q & 1 & 0 & 0 & 0 & 0 \\
q^{3} & q^{2} & q & 0 & 1 & 0 & 0 & 0 \\
q^{3}+q^{4} & q^{3}+q^{2} & q^{2} & q & q & 1 & 0 & 0 \\
q^{3}+q^{5} & q^{4} & q^{3} & q^{2} & q^{2} & q & 1 & 0 \\
q^{6} & q^{5} & q^{4} & q^{3} & q^{3} & q^{2} & q &  1
";

pub const N: &str = r"
1 & 0 & 0 & 0 & 0 & 0 & 0 & 0\\
-q & 1  & 0 & 0 & 0 & 0 & 0 & 0 \\
0 & -q & 1 & 0 & 0 & 0 & 0 & 0 \\
0 & 0 & -q & 1 & 0 & 0 & 0 & 0 \\
0 & 0 & -q & 0 & 1 & 0 & 0 & 0 \\
0 & -q & q^{2} & -q & -q & 1 & 0 & 0 \\
-q & q^{2} & 0 & 0 & 0 & -q & 1 & 0 \\
q^{2} & 0 & 0 & 0 & 0 & 0 & -q &  1
";

pub const NINV: &str = r"
1 & 0 & 0 & 0 & 0 & 0 & 0 & 0\\
q & 1  & 0 & 0 & 0 & 0 & 0 & 0 \\
q^{2} & q & 1 & 0 & 0 & 0 & 0 & 0 \\
q^{3} & q^{2} & q & 1 & 0 & 0 & 0 & 0 \\
q^{3} & q^{2} & q & 0 & 1 & 0 & 0 & 0 \\
q^{2}+q^{4} & q+q^{3} & q^{2} & q & q & 1 & 0 & 0 \\
q+q^{5} & q^{4} & q^{3} & q^{2} & q^{2} & q & 1 & 0 \\
q^{6} & q^{5} & q^{4} & q^{3} & q^{3} & q^{2} & q &  1
";

/// Rows split on `\\`, cells on `&`.
pub fn parse(latex: &str) -> Vec<Vec<PolyQ>> {
    latex
        .split("\\\\")
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split('&')
                .map(|c| c.trim().parse().expect("golden entries are polynomials"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for m in [M, MINV, N, NINV] {
            let rows = parse(m);
            assert_eq!(rows.len(), 8);
            assert!(rows.iter().all(|r| r.len() == 8));
        }
        assert_eq!(parse(MINV)[6][0], "q^{3}+q^{5}".parse().unwrap());
    }
}
