//! Flip-weighted incidence matrices over the type-D basis and their inverses.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linkflip::all_flips;
use crate::pathword::{enumerate_type_d, PathWord};
use crate::qpoly::PolyQ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WeightKind {
    /// `wt^I`, the matrix M.
    I,
    /// `wt^II`, the matrix N.
    II,
}

/// Square matrix indexed by (row λ, column μ) over a word basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    pub basis: Vec<PathWord>,
    pub entries: Vec<Vec<PolyQ>>,
}

impl IncidenceMatrix {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn identity(basis: Vec<PathWord>) -> Self {
        let n = basis.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { PolyQ::one() } else { PolyQ::zero() })
                    .collect()
            })
            .collect();
        IncidenceMatrix { basis, entries }
    }

    pub fn index_of(&self, w: &PathWord) -> Option<usize> {
        self.basis.iter().position(|b| b == w)
    }

    pub fn entry(&self, lam: &PathWord, mu: &PathWord) -> Option<&PolyQ> {
        Some(&self.entries[self.index_of(lam)?][self.index_of(mu)?])
    }

    /// Ones on the diagonal, zeros above it.
    pub fn is_lower_unitriangular(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            self.entries[i][i].is_one() && (i + 1..n).all(|j| self.entries[i][j].is_zero())
        })
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        let n = self.size();
        let entries = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = PolyQ::zero();
                        for k in 0..n {
                            if !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero() {
                                acc += &(&self.entries[i][k] * &other.entries[k][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        IncidenceMatrix {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda\\mu");
        for b in &self.basis {
            out.push(',');
            out.push_str(&b.to_string());
        }
        out.push('\n');
        for (b, row) in self.basis.iter().zip(&self.entries) {
            out.push_str(&b.to_string());
            for e in row {
                out.push(',');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// `pmatrix` body in the layout of the printed examples.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        let n = self.size();
        for (i, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(PolyQ::to_latex).collect();
            out.push_str(&cells.join(" & "));
            if i + 1 < n {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}");
        out
    }
}

/// M (kind I) or N (kind II) on the basis `enumerate_type_d(n, eps)`.
/// Entry (λ, μ) is the weight of the arc subset of μ whose flip gives λ.
pub fn build(n: usize, eps: u8, kind: WeightKind) -> IncidenceMatrix {
    let basis = enumerate_type_d(n, eps);
    let index: HashMap<&PathWord, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let columns: Vec<Vec<(usize, PolyQ)>> = basis
        .par_iter()
        .map(|mu| {
            let mut seen = HashMap::new();
            for f in all_flips(mu) {
                let row = *index
                    .get(&f.word)
                    .expect("flips preserve the sign, so the image is in the basis");
                let w = match kind {
                    WeightKind::I => f.weight_i,
                    WeightKind::II => f.weight_ii,
                };
                let prev = seen.insert(row, w);
                assert!(prev.is_none(), "two arc subsets of {mu} flip to the same word");
            }
            seen.into_iter().collect()
        })
        .collect();
    let size = basis.len();
    let mut entries = vec![vec![PolyQ::zero(); size]; size];
    for (col, cells) in columns.into_iter().enumerate() {
        for (row, w) in cells {
            entries[row][col] = w;
        }
    }
    IncidenceMatrix { basis, entries }
}

/// Exact inverse of a lower-unitriangular matrix by forward substitution.
pub fn invert(m: &IncidenceMatrix) -> Result<IncidenceMatrix> {
    let n = m.size();
    for i in 0..n {
        if !m.entries[i][i].is_one() {
            return Err(Error::NotUnitriangular(i, i));
        }
        for j in i + 1..n {
            if !m.entries[i][j].is_zero() {
                return Err(Error::NotUnitriangular(i, j));
            }
        }
    }
    let cols: Vec<Vec<PolyQ>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut x = vec![PolyQ::zero(); n];
            x[j] = PolyQ::one();
            for i in j + 1..n {
                let mut s = PolyQ::zero();
                for k in j..i {
                    if !m.entries[i][k].is_zero() && !x[k].is_zero() {
                        s += &(&m.entries[i][k] * &x[k]);
                    }
                }
                x[i] = -s;
            }
            x
        })
        .collect();
    let entries = (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect();
    let inv = IncidenceMatrix {
        basis: m.basis.clone(),
        entries,
    };
    debug_assert!(m.mul(&inv) == IncidenceMatrix::identity(m.basis.clone()));
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_sizes() {
        let m = build(1, 0, WeightKind::I);
        assert_eq!(m.basis, vec![w("U")]);
        assert_eq!(m.entries, vec![vec![PolyQ::one()]]);
        let id = IncidenceMatrix::identity(m.basis.clone());
        assert_eq!(invert(&id).unwrap(), id);
    }

    #[test]
    fn selected_entries() {
        let m = build(4, 0, WeightKind::I);
        assert_eq!(m.entry(&w("DDUU"), &w("UUUU")).unwrap(), &PolyQ::monomial(-1, 3));
        assert_eq!(m.entry(&w("DUDU"), &w("UUDD")).unwrap(), &PolyQ::monomial(-1, 2));
        let inv = invert(&m).unwrap();
        assert_eq!(
            inv.entry(&w("DDUU"), &w("UUUU")).unwrap(),
            &PolyQ::from_coeffs([0, 0, 0, 1, 0, 1])
        );
        let ninv = invert(&build(4, 0, WeightKind::II)).unwrap();
        assert_eq!(
            ninv.entry(&w("DUDU"), &w("UUUU")).unwrap(),
            &PolyQ::from_coeffs([0, 0, 1, 0, 1])
        );
    }

    #[test]
    fn inverse_is_two_sided() {
        for eps in 0..2 {
            let m = build(5, eps, WeightKind::II);
            let inv = invert(&m).unwrap();
            let id = IncidenceMatrix::identity(m.basis.clone());
            assert_eq!(m.mul(&inv), id);
            assert_eq!(inv.mul(&m), id);
        }
    }

    #[test]
    fn rejects_non_unitriangular() {
        let mut m = build(2, 0, WeightKind::I);
        m.entries[0][0] = PolyQ::from(2);
        assert_eq!(invert(&m), Err(Error::NotUnitriangular(0, 0)));
    }

    #[test]
    fn renderings() {
        let m = build(2, 1, WeightKind::I);
        assert_eq!(m.basis, vec![w("UD"), w("DU")]);
        assert_eq!(m.to_csv(), "lambda\\mu,UD,DU\nUD,1,0\nDU,-q,1\n");
        assert_eq!(
            m.to_latex(),
            "\\begin{pmatrix}\n1 & 0 \\\\\n-q & 1\n\\end{pmatrix}"
        );
    }
}
