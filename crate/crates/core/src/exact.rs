//! Exact rational reference implementations of the truncated sums and
//! truncated polylogarithms, plus the two polynomial identities over Q.
//!
//! Everything here is deliberately naive (nested-loop summation, schoolbook
//! polynomial products): this module is the trusted oracle the modular
//! evaluations are checked against, so clarity wins over speed.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::indices::Index;

/// Arbitrary-precision reduced fraction; kept canonical by construction.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact integer binomial coefficient C(top, bottom).
pub fn binomial(top: u64, bottom: u64) -> BigUint {
    if bottom > top {
        return BigUint::zero();
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = BigUint::one();
    for i in 1..=bottom {
        acc = acc * BigUint::from(top - bottom + i) / BigUint::from(i);
    }
    acc
}

/// The four summation/monomial shapes of the truncated multiple
/// polylogarithms: harmonic monomials t_i^{n_i} vs shuffle monomials
/// t_i^{n_i - n_{i+1}}, with strict (>) or weakly (>=) decreasing summation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolylogKind {
    Harmonic,
    HarmonicStar,
    Shuffle,
    ShuffleStar,
}

impl PolylogKind {
    pub const ALL: [PolylogKind; 4] = [
        PolylogKind::Harmonic,
        PolylogKind::HarmonicStar,
        PolylogKind::Shuffle,
        PolylogKind::ShuffleStar,
    ];

    /// Strict summation (>) as opposed to weakly decreasing (>=).
    pub fn strict(self) -> bool {
        matches!(self, PolylogKind::Harmonic | PolylogKind::Shuffle)
    }

    /// Shuffle-type monomials t_i^{n_i - n_{i+1}} instead of t_i^{n_i}.
    pub fn shuffle_monomial(self) -> bool {
        matches!(self, PolylogKind::Shuffle | PolylogKind::ShuffleStar)
    }

    pub fn star(self) -> bool {
        !self.strict()
    }

    pub fn name(self) -> &'static str {
        match self {
            PolylogKind::Harmonic => "harmonic",
            PolylogKind::HarmonicStar => "harmonic-star",
            PolylogKind::Shuffle => "shuffle",
            PolylogKind::ShuffleStar => "shuffle-star",
        }
    }
}

/// Visit every chain bound >= n_1 (>|>=) n_2 ... (>|>=) n_len >= 1.
/// Chains are visited in lexicographically decreasing order of the tuple.
pub(crate) fn for_each_chain(bound: u64, len: usize, strict: bool, f: &mut impl FnMut(&[u64])) {
    fn rec(bound: u64, left: usize, strict: bool, prefix: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if left == 0 {
            f(prefix);
            return;
        }
        for v in (1..=bound).rev() {
            prefix.push(v);
            let next = if strict { v - 1 } else { v };
            rec(next, left - 1, strict, prefix, f);
            prefix.pop();
        }
    }
    let mut prefix = Vec::with_capacity(len);
    rec(bound, len, strict, &mut prefix, f);
}

fn summand(chain: &[u64], k: &Index) -> Rational {
    let mut denom = BigInt::one();
    for (&v, &e) in chain.iter().zip(k.parts()) {
        denom *= BigInt::from(v).pow(e);
    }
    BigRational::new(BigInt::one(), denom)
}

/// The truncated multiple harmonic sum over strictly decreasing chains
/// n >= n_1 > ... > n_m >= 1; zero when the summation range is empty.
pub fn zeta_trunc(n: u64, k: &Index) -> Rational {
    let mut total = BigRational::zero();
    for_each_chain(n, k.depth(), true, &mut |chain| {
        total += summand(chain, k);
    });
    total
}

/// The star variant over weakly decreasing chains n >= n_1 >= ... >= n_m >= 1.
pub fn zeta_star_trunc(n: u64, k: &Index) -> Rational {
    let mut total = BigRational::zero();
    for_each_chain(n, k.depth(), false, &mut |chain| {
        total += summand(chain, k);
    });
    total
}

/// Sparse multivariate polynomial over Q with nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQ {
    vars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

/// Simultaneous substitution targets for [`PolyQ::substitute`].
#[derive(Clone, Debug)]
pub enum QAssign {
    Keep,
    Const(Rational),
    /// Replace the variable by another variable of the same polynomial.
    Var(usize),
}

impl PolyQ {
    pub fn zero(vars: usize) -> Self {
        PolyQ {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut poly = PolyQ::zero(vars);
        poly.add_term(vec![0; vars], c);
        poly
    }

    pub fn one(vars: usize) -> Self {
        PolyQ::constant(vars, BigRational::one())
    }

    /// The monomial c * t_1^{e_1} ... t_m^{e_m}.
    pub fn monomial(vars: usize, exps: Vec<i64>, c: Rational) -> Self {
        let mut poly = PolyQ::zero(vars);
        poly.add_term(exps, c);
        poly
    }

    /// The polynomial 1 - t_j.
    pub fn one_minus_var(vars: usize, j: usize) -> Self {
        let mut poly = PolyQ::one(vars);
        let mut exps = vec![0; vars];
        exps[j] = 1;
        poly.add_term(exps, -BigRational::one());
        poly
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: Rational) {
        assert_eq!(exps.len(), self.vars, "exponent tuple length mismatch");
        debug_assert!(exps.iter().all(|&e| e >= 0), "PolyQ exponents are >= 0");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_compatible(&self, other: &PolyQ) {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyQ {
        let mut out = PolyQ::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> PolyQ {
        let mut out = PolyQ::zero(self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, coeff) in &self.terms {
            out.add_term(e.clone(), coeff * c);
        }
        out
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        self.assert_compatible(other);
        let mut out = PolyQ::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut out = PolyQ::one(self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Simultaneous substitution; `assignments` must list one target per
    /// variable. `Var(j)` folds the exponent onto variable j.
    pub fn substitute(&self, assignments: &[QAssign]) -> PolyQ {
        assert_eq!(assignments.len(), self.vars, "one assignment per variable");
        let mut out = PolyQ::zero(self.vars);
        'term: for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut target = vec![0i64; self.vars];
            for (j, &e) in exps.iter().enumerate() {
                match &assignments[j] {
                    QAssign::Keep => target[j] += e,
                    QAssign::Var(dst) => target[*dst] += e,
                    QAssign::Const(v) => {
                        if e > 0 {
                            if v.is_zero() {
                                continue 'term;
                            }
                            let mut pow = BigRational::one();
                            for _ in 0..e {
                                pow *= v;
                            }
                            coeff *= pow;
                        }
                    }
                }
            }
            out.add_term(target, coeff);
        }
        out
    }

    /// Remove variables whose exponent is zero in every term, renumbering the
    /// survivors in order.
    pub fn drop_vars(&self, drop: &[usize]) -> Result<PolyQ> {
        let mut dropped = vec![false; self.vars];
        for &j in drop {
            dropped[j] = true;
        }
        for (exps, _) in &self.terms {
            for (j, &e) in exps.iter().enumerate() {
                if dropped[j] && e != 0 {
                    return Err(Error::VarInUse { var: j });
                }
            }
        }
        let kept: Vec<usize> = (0..self.vars).filter(|j| !dropped[*j]).collect();
        let mut out = PolyQ::zero(kept.len());
        for (exps, c) in &self.terms {
            let new_exps: Vec<i64> = kept.iter().map(|&j| exps[j]).collect();
            out.add_term(new_exps, c.clone());
        }
        Ok(out)
    }

    /// Value at t_1 = ... = t_m = 1 (the sum of all coefficients).
    pub fn eval_all_ones(&self) -> Rational {
        let mut total = BigRational::zero();
        for c in self.terms.values() {
            total += c;
        }
        total
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Graded-lex order, highest degree first.
        let mut terms: Vec<(&Vec<i64>, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().sum();
            let db: i64 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        for (i, (exps, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", render_term(&abs.to_string(), abs.is_one(), exps))?;
        }
        Ok(())
    }
}

/// Shared monomial rendering: `coeff*t1^2*t3` with unit coefficients elided.
pub(crate) fn render_term(coeff: &str, coeff_is_one: bool, exps: &[i64]) -> String {
    let mut factors = Vec::new();
    for (j, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            factors.push(format!("t{}", j + 1));
        } else {
            factors.push(format!("t{}^{}", j + 1, e));
        }
    }
    if factors.is_empty() {
        coeff.to_string()
    } else if coeff_is_one {
        factors.join("*")
    } else {
        format!("{}*{}", coeff, factors.join("*"))
    }
}

/// The truncated multiple polylogarithm of the given kind as a polynomial in
/// t_1 ... t_m, m = dep(k).
pub fn polylog_trunc(kind: PolylogKind, n: u64, k: &Index) -> PolyQ {
    let m = k.depth();
    let mut poly = PolyQ::zero(m);
    for_each_chain(n, m, kind.strict(), &mut |chain| {
        let exps = monomial_exps(kind, chain);
        poly.add_term(exps, summand(chain, k));
    });
    poly
}

pub(crate) fn monomial_exps(kind: PolylogKind, chain: &[u64]) -> Vec<i64> {
    let m = chain.len();
    if kind.shuffle_monomial() {
        (0..m)
            .map(|i| {
                if i + 1 < m {
                    (chain[i] - chain[i + 1]) as i64
                } else {
                    chain[i] as i64
                }
            })
            .collect()
    } else {
        chain.iter().map(|&v| v as i64).collect()
    }
}

/// Both sides of the symmetric reflection identity in Q[t_1, ..., t_w]:
/// the alternating C(N, n_1)-weighted shuffle-star sum with last factor
/// (t_w^{n_w} - 1/2) against the same shape in (1 - t_j) with
/// ((1 - t_w)^{n_w} - 1/2).
pub fn symmetric_identity_sides(n_cap: u64, w: usize) -> (PolyQ, PolyQ) {
    reflection_sides(n_cap, w, &rat(1, 2), &rat(1, 2))
}

/// Both sides of the plain reflection identity: the alternating binomial sum
/// with full last factor t_w^{n_w} against (1 - t_j)-monomials with
/// ((1 - t_w)^{n_w} - 1).
pub fn shuffle_reflection_sides(n_cap: u64, w: usize) -> (PolyQ, PolyQ) {
    reflection_sides(n_cap, w, &BigRational::zero(), &BigRational::one())
}

fn reflection_sides(
    n_cap: u64,
    w: usize,
    lhs_shift: &Rational,
    rhs_shift: &Rational,
) -> (PolyQ, PolyQ) {
    let mut lhs = PolyQ::zero(w);
    let mut rhs = PolyQ::zero(w);
    for_each_chain(n_cap, w, false, &mut |chain| {
        let mut denom = BigInt::one();
        for &v in chain {
            denom *= BigInt::from(v);
        }
        let inv = BigRational::new(BigInt::one(), denom);
        let binom = BigInt::from(binomial(n_cap, chain[0]));
        let mut weighted = &inv * BigRational::from(binom);
        if chain[0] % 2 == 1 {
            weighted = -weighted;
        }

        // Left side: shuffle monomial, last factor t_w^{n_w} - lhs_shift.
        let exps = monomial_exps(PolylogKind::ShuffleStar, chain);
        let mut head = exps.clone();
        head[w - 1] = 0;
        lhs.add_term(exps.clone(), weighted.clone());
        lhs.add_term(head, -(&weighted * lhs_shift));

        // Right side: the same shape in 1 - t, without the binomial weight,
        // last factor (1 - t_w)^{n_w} - rhs_shift.
        let mut prod = PolyQ::constant(w, inv.clone());
        for (j, &e) in exps.iter().enumerate().take(w - 1) {
            prod = prod.mul(&PolyQ::one_minus_var(w, j).pow(e as u32));
        }
        let last_exp = *chain.last().expect("nonempty chain") as u32;
        let last = PolyQ::one_minus_var(w, w - 1)
            .pow(last_exp)
            .sub(&PolyQ::constant(w, rhs_shift.clone()));
        rhs = rhs.add(&prod.mul(&last));
    });
    (lhs, rhs)
}

/// Verifies the symmetric reflection identity for the given size.
pub fn check_symmetric_identity(n_cap: u64, w: usize) -> bool {
    let (lhs, rhs) = symmetric_identity_sides(n_cap, w);
    lhs == rhs
}

/// Verifies the plain reflection identity for the given size.
pub fn check_shuffle_reflection(n_cap: u64, w: usize) -> bool {
    let (lhs, rhs) = shuffle_reflection_sides(n_cap, w);
    lhs == rhs
}
