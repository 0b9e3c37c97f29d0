//! Exact multivariate polynomials over the rationals in the variables
//! `x, y, w, z, u, v`.
//!
//! A polynomial carries a declared variable list. It fixes the printing order
//! (graded lexicographic, variables compared in declared order) and the
//! exponent layout of the JSON form. Arithmetic merges declared lists.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
    W,
    Z,
    U,
    V,
}

pub const NUM_VARS: usize = 6;

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::X, Var::Y, Var::W, Var::Z, Var::U, Var::V];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::W => "w",
            Var::Z => "z",
            Var::U => "u",
            Var::V => "v",
        }
    }

    fn from_char(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name().starts_with(c))
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponents indexed by [`Var`].
pub type Exponents = [u32; NUM_VARS];

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Exponents, Rational>,
}

fn merge_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(*v);
        }
    }
    out
}

impl MultiPoly {
    pub fn zero(vars: &[Var]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[Var], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term([0; NUM_VARS], c);
        p
    }

    pub fn one(vars: &[Var]) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &[Var], v: Var) -> Self {
        let vars = merge_vars(vars, &[v]);
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        let mut p = Self::zero(&vars);
        p.add_term(e, Rational::one());
        p
    }

    /// Builds `Σ count · Π vars[i]^exps[i]` from aggregated integer counts.
    pub fn from_counts<I>(vars: &[Var], counts: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, u64)>,
    {
        let mut p = Self::zero(vars);
        for (exps, count) in counts {
            debug_assert_eq!(exps.len(), vars.len());
            let mut e = [0; NUM_VARS];
            for (v, k) in vars.iter().zip(exps) {
                e[v.index()] = k;
            }
            p.add_term(e, BigRational::from_integer(BigInt::from(count)));
        }
        p
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        for v in Var::ALL {
            if e[v.index()] > 0 && !self.vars.contains(&v) {
                self.vars.push(v);
            }
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Coefficient of `Π v^k` over the given `(variable, exponent)` pairs.
    pub fn coeff(&self, monomial: &[(Var, u32)]) -> Rational {
        let mut e = [0; NUM_VARS];
        for &(v, k) in monomial {
            e[v.index()] = k;
        }
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            p.add_term(*e, k * c);
        }
        p
    }

    /// Re-declares the variable list, e.g. to control printing order.
    pub fn with_vars(mut self, vars: &[Var]) -> Self {
        let mut declared = vars.to_vec();
        for v in &self.vars {
            if !declared.contains(v) && self.degree_in(*v) > 0 {
                declared.push(*v);
            }
        }
        self.vars = declared;
        self
    }

    pub fn evaluate(&self, assignment: &HashMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let k = e[v.index()];
                if k == 0 {
                    continue;
                }
                let val = assignment
                    .get(&v)
                    .ok_or_else(|| Error::MissingAssignment(v.name().into()))?;
                t *= num_traits::pow(val.clone(), k as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Convenience evaluation with integer values.
    pub fn evaluate_ints(&self, assignment: &[(Var, i64)]) -> Result<Rational> {
        let map = assignment.iter().map(|&(v, n)| (v, integer(n))).collect();
        self.evaluate(&map)
    }

    /// Replaces each listed variable by a polynomial. Unlisted variables stay.
    pub fn substitute(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut kept_vars: Vec<Var> = self
            .vars
            .iter()
            .copied()
            .filter(|v| !subs.iter().any(|(s, _)| s == v))
            .collect();
        for (_, q) in subs {
            kept_vars = merge_vars(&kept_vars, &q.vars);
        }
        let mut out = MultiPoly::zero(&kept_vars);
        let mut power_cache: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        for (e, c) in &self.terms {
            let mut base = [0; NUM_VARS];
            let mut term = MultiPoly::zero(&kept_vars);
            for v in Var::ALL {
                if !subs.iter().any(|(s, _)| *s == v) {
                    base[v.index()] = e[v.index()];
                }
            }
            term.add_term(base, c.clone());
            for (s, q) in subs {
                let k = e[s.index()];
                if k == 0 {
                    continue;
                }
                let qk = power_cache
                    .entry((*s, k))
                    .or_insert_with(|| q.pow(k))
                    .clone();
                term = &term * &qk;
            }
            out = &out + &term;
        }
        out.with_vars(&kept_vars)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        let key = |e: &Exponents| -> (u32, Vec<u32>) {
            let total = e.iter().sum();
            let lex = self.vars.iter().map(|v| e[v.index()]).collect();
            (total, lex)
        };
        ts.sort_by_key(|t| std::cmp::Reverse(key(t.0)));
        ts
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| JsonTerm {
                exponents: self
                    .vars
                    .iter()
                    .map(|v| (v.name().to_string(), e[v.index()]))
                    .collect(),
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MultiPoly> {
        let bad = |m: String| Error::Parse {
            line: 1,
            message: m,
        };
        let terms: Vec<JsonTerm> =
            serde_json::from_value(value.clone()).map_err(|e| bad(e.to_string()))?;
        let mut vars = Vec::new();
        let mut p = MultiPoly::zero(&[]);
        for t in terms {
            let mut e = [0; NUM_VARS];
            for (name, k) in &t.exponents {
                let v = single_var(name).ok_or_else(|| bad(format!("unknown variable {name}")))?;
                if !vars.contains(&v) {
                    vars.push(v);
                }
                e[v.index()] = *k;
            }
            let c: Rational = t.coeff.parse().map_err(|_| bad(format!("bad coefficient {}", t.coeff)))?;
            p.add_term(e, c);
        }
        Ok(p.with_vars(&vars))
    }
}

fn single_var(name: &str) -> Option<Var> {
    let mut cs = name.chars();
    let c = cs.next()?;
    if cs.next().is_some() {
        return None;
    }
    Var::from_char(c)
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: BTreeMap<String, u32>,
    coeff: String,
}

/// Coefficient-wise equality; the declared variable lists are not compared.
impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> = self
                .vars
                .iter()
                .filter(|v| e[v.index()] > 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the canonical text form: signed terms such as `3/2*x^2*y`.
    /// Variables are declared in order of first appearance.
    fn from_str(s: &str) -> Result<MultiPoly> {
        let bad = |m: String| Error::Parse {
            line: 1,
            message: m,
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial".into()));
        }
        let mut p = MultiPoly::zero(&[]);
        let mut vars: Vec<Var> = Vec::new();
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-1, &piece[1..]),
                Some(b'+') => (1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(bad(format!("dangling sign in {s:?}")));
            }
            let mut coeff = integer(sign);
            let mut e = [0; NUM_VARS];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(bad(format!("empty factor in {s:?}")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let c: Rational = factor
                        .parse()
                        .map_err(|_| bad(format!("bad coefficient {factor:?}")))?;
                    coeff *= c;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, k)) => (
                        n,
                        k.parse::<u32>()
                            .map_err(|_| bad(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let v = single_var(name).ok_or_else(|| bad(format!("unknown variable {name:?}")))?;
                if !vars.contains(&v) {
                    vars.push(v);
                }
                e[v.index()] += exp;
            }
            p.add_term(e, coeff);
        }
        Ok(p.with_vars(&vars))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.vars = merge_vars(&self.vars, &rhs.vars);
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&merge_vars(&self.vars, &rhs.vars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NUM_VARS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `Σ c[i][j] (a−1)^i (b−1)^j`, the shape of the subset-rank expansion.
pub(crate) fn shifted_bivariate(a: Var, b: Var, counts: &[Vec<u64>]) -> MultiPoly {
    let vars = [a, b];
    let am1 = &MultiPoly::var(&vars, a) - &MultiPoly::one(&vars);
    let bm1 = &MultiPoly::var(&vars, b) - &MultiPoly::one(&vars);
    let mut out = MultiPoly::zero(&vars);
    let bpows: Vec<MultiPoly> = {
        let width = counts.iter().map(Vec::len).max().unwrap_or(0);
        let mut v = vec![MultiPoly::one(&vars)];
        for k in 1..width {
            v.push(&v[k - 1] * &bm1);
        }
        v
    };
    let mut apow = MultiPoly::one(&vars);
    for row in counts {
        let mut inner = MultiPoly::zero(&vars);
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                inner = &inner + &bpows[j].scale(&BigRational::from_integer(BigInt::from(c)));
            }
        }
        out = &out + &(&apow * &inner);
        apow = &apow * &am1;
    }
    out.with_vars(&vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const XY: [Var; 2] = [Var::X, Var::Y];

    fn x() -> MultiPoly {
        MultiPoly::var(&XY, Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(&XY, Var::Y)
    }
    fn one() -> MultiPoly {
        MultiPoly::one(&XY)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() - &one()) * &(&x() + &one());
        assert_eq!(p.to_string(), "x^2 - 1");
        let q = &(&x() + &y()).pow(2) - &(&x() * &y()).scale(&integer(2));
        assert_eq!(q.to_string(), "x^2 + y^2");
    }

    #[test]
    fn k3_evaluation() {
        let t: MultiPoly = "x^2 + x + y".parse().unwrap();
        assert_eq!(t.evaluate_ints(&[(Var::X, 1), (Var::Y, 1)]).unwrap(), integer(3));
        assert!(matches!(
            t.evaluate_ints(&[(Var::X, 1)]),
            Err(Error::MissingAssignment(_))
        ));
    }

    #[test]
    fn restriction_by_substitution() {
        let vars = [Var::X, Var::W, Var::Y, Var::Z];
        let p: MultiPoly = "x*w + x^2 + y*z + z".parse().unwrap();
        let zero = MultiPoly::zero(&vars);
        let q = p.substitute(&[(Var::W, zero.clone()), (Var::Y, zero)]);
        assert_eq!(q, "x^2 + z".parse().unwrap());
    }

    #[test]
    fn substitute_shift() {
        let t: MultiPoly = "x^2 + x + y".parse().unwrap();
        let vars = [Var::X, Var::W, Var::Y, Var::Z];
        let xw = &MultiPoly::var(&vars, Var::X) + &MultiPoly::var(&vars, Var::W);
        let yz = &MultiPoly::var(&vars, Var::Y) + &MultiPoly::var(&vars, Var::Z);
        let s = t.substitute(&[(Var::X, xw), (Var::Y, yz)]);
        assert_eq!(s.to_string(), "x^2 + 2*x*w + w^2 + x + w + y + z");
    }

    #[test]
    fn rational_printing_and_parsing() {
        let p: MultiPoly = "1/2*u^2 - 3/4*v + 5".parse().unwrap();
        assert_eq!(p.to_string(), "1/2*u^2 - 3/4*v + 5");
        assert_eq!(MultiPoly::zero(&XY).to_string(), "0");
        assert!("x^".parse::<MultiPoly>().is_err());
        assert!("q".parse::<MultiPoly>().is_err());
        assert!("x + ".parse::<MultiPoly>().is_err());
        assert!(!p.has_nonnegative_integer_coefficients());
    }

    #[test]
    fn json_roundtrip() {
        let p: MultiPoly = "x^2 + 2*x*y - 1/3".parse().unwrap();
        let j = p.to_json();
        assert_eq!(j[0]["exponents"]["x"], 2);
        assert_eq!(MultiPoly::from_json(&j).unwrap(), p);
    }

    #[test]
    fn shifted_bivariate_matches_direct_expansion() {
        // (x-1)^1 (y-1)^0 * 2 + (y-1)^1 * 1
        let p = shifted_bivariate(Var::X, Var::Y, &[vec![0, 1], vec![2]]);
        assert_eq!(p, "2*x + y - 3".parse().unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -4i64..5, 1i64..4), 0..5).prop_map(
            |terms| {
                let mut p = MultiPoly::zero(&[Var::X, Var::Y, Var::W]);
                for (a, b, c, n, d) in terms {
                    let mut e = [0; NUM_VARS];
                    e[0] = a;
                    e[1] = b;
                    e[2] = c;
                    p.add_term(e, rational(n, d));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn print_parse_roundtrip(p in arb_poly()) {
            let back: MultiPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
