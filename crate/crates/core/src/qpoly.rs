//! Exact polynomials in one variable `q` with arbitrary-precision integer
//! coefficients, plus the q-analogues used throughout: [n], [n]!, [2m]!!
//! and the two q-binomials.
//!
//! Quotients of q-integers are never stored; callers build the numerator
//! and then call [`PolyQ::exact_div`], which fails loudly on a remainder.

use std::fmt;
use std::str::FromStr;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
/// Canonical: no trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<BigInt>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        PolyQ { coeffs }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = PolyQ {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^k`.
    pub fn scale_by_monomial(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQ { coeffs }
    }

    /// Substitute `q -> q^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        PolyQ { coeffs }
    }

    /// Quotient `self / b`, or `InexactDivision` carrying the remainder.
    pub fn exact_div(&self, b: &PolyQ) -> Result<PolyQ> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead = &b.coeffs[db];
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::InexactDivision {
                    remainder: self.clone(),
                })
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                let mut r = PolyQ { coeffs: rem };
                r.normalize();
                return Err(Error::InexactDivision { remainder: r });
            }
            let c = top / lead;
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k + i] -= &c * bc;
            }
            quot[k] = c;
        }
        let mut r = PolyQ { coeffs: rem };
        r.normalize();
        if !r.is_zero() {
            return Err(Error::InexactDivision { remainder: r });
        }
        let mut q = PolyQ { coeffs: quot };
        q.normalize();
        Ok(q)
    }

    pub fn product<'a, I: IntoIterator<Item = &'a PolyQ>>(it: I) -> PolyQ {
        it.into_iter().fold(PolyQ::one(), |acc, p| &acc * p)
    }

    /// Rendering as a LaTeX expression such as `q^{3}+q^{5}`.
    pub fn to_latex(&self) -> String {
        self.render(|k| match k {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{{{k}}}"),
        }, "+", "-")
    }

    fn render(&self, mono: impl Fn(usize) -> String, plus: &str, minus: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { minus } else { plus });
            }
            let a = c.abs();
            let m = mono(k);
            if m.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                }
                out.push_str(&m);
            }
        }
        out
    }
}

/// Human-readable form, ascending powers: `1 + 2q^2 - q^3`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |k| match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            },
            " + ",
            " - ",
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

/// Accepts both renderings: `1 + 2q^2 - q^3` and `q^{3}+q^{5}`.
impl FromStr for PolyQ {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let bad = || Error::ParsePoly(src.to_string());
        let s: String = src
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in s.char_indices() {
            if (c == '+' || c == '-') && i > start {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = PolyQ::zero();
        for t in terms {
            let (neg, body) = match t.as_bytes()[0] {
                b'-' => (true, &t[1..]),
                b'+' => (false, &t[1..]),
                _ => (false, t),
            };
            let (coef, power) = match body.find('q') {
                None => (body, 0),
                Some(k) => {
                    let exp = &body[k + 1..];
                    let power = match exp.strip_prefix('^') {
                        None if exp.is_empty() => 1,
                        Some(e) => e.parse::<usize>().map_err(|_| bad())?,
                        None => return Err(bad()),
                    };
                    (&body[..k], power)
                }
            };
            let mut c = if coef.is_empty() {
                if power == 0 {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                coef.parse::<BigInt>().map_err(|_| bad())?
            };
            if neg {
                c = -c;
            }
            acc += &PolyQ::monomial(c, power);
        }
        Ok(acc)
    }
}

impl From<i64> for PolyQ {
    fn from(c: i64) -> Self {
        PolyQ::monomial(c, 0)
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = PolyQ { coeffs };
        p.normalize();
        p
    }
}

impl Add for PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: PolyQ) -> PolyQ {
        &self + &rhs
    }
}

impl AddAssign<&PolyQ> for PolyQ {
    fn add_assign(&mut self, rhs: &PolyQ) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        self.normalize();
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl Sub for PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: PolyQ) -> PolyQ {
        &self - &rhs
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = PolyQ { coeffs };
        p.normalize();
        p
    }
}

impl Mul for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: PolyQ) -> PolyQ {
        &self * &rhs
    }
}

// JSON form: {"coeffs":[c0,c1,...]}. Coefficients that overflow i64 are
// written as decimal strings.
impl Serialize for PolyQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        let cs: Vec<Coeff> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => Coeff::Small(v),
                None => Coeff::Big(c.to_string()),
            })
            .collect();
        let mut st = s.serialize_struct("PolyQ", 1)?;
        st.serialize_field("coeffs", &cs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PolyQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Coeff>,
        }
        let raw = Raw::deserialize(d)?;
        let mut out = Vec::with_capacity(raw.coeffs.len());
        for c in raw.coeffs {
            out.push(match c {
                Coeff::Small(v) => BigInt::from(v),
                Coeff::Big(s) => s.parse::<BigInt>().map_err(de::Error::custom)?,
            });
        }
        Ok(PolyQ::from_coeffs(out))
    }
}

/// `[n] = 1 + q + ... + q^{n-1}`; `[0] = 0`.
pub fn q_int(n: usize) -> PolyQ {
    PolyQ::from_coeffs(std::iter::repeat_n(1i64, n))
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: usize) -> PolyQ {
    (1..=n).fold(PolyQ::one(), |acc, i| &acc * &q_int(i))
}

/// `[2m]!! = [2][4]...[2m]`.
pub fn q_double_factorial_even(m: usize) -> PolyQ {
    (1..=m).fold(PolyQ::one(), |acc, i| &acc * &q_int(2 * i))
}

fn check_binomial_args(n: i64, m: i64) -> Result<(usize, usize)> {
    if m < 0 || n < 0 || m > n {
        return Err(Error::Domain(format!(
            "binomial arguments need 0 <= m <= n, got n={n}, m={m}"
        )));
    }
    Ok((n as usize, m as usize))
}

/// Gaussian binomial `[n]! / ([n-m]! [m]!)`.
pub fn q_binomial(n: i64, m: i64) -> Result<PolyQ> {
    let (n, m) = check_binomial_args(n, m)?;
    let den = &q_factorial(n - m) * &q_factorial(m);
    q_factorial(n).exact_div(&den)
}

/// The q²-binomial `[2n]!! / ([2(n-m)]!! [2m]!!)`.
pub fn q2_binomial(n: i64, m: i64) -> Result<PolyQ> {
    let (n, m) = check_binomial_args(n, m)?;
    let den = &q_double_factorial_even(n - m) * &q_double_factorial_even(m);
    q_double_factorial_even(n).exact_div(&den)
}

/// `(1+q)(1+q^2)...(1+q^n)`.
pub fn one_plus_q_product(n: usize) -> PolyQ {
    (1..=n).fold(PolyQ::one(), |acc, i| &acc * &(PolyQ::one() + PolyQ::monomial(1, i)))
}
