//! Residue arithmetic in Z/p^n Z and direct modular evaluation of the
//! truncated sums and polylogarithms, one prime at a time.
//!
//! Modular sums are evaluated directly in Z/p^n (every summation index is
//! at most p - 1, hence a unit); the exact rational path in [`crate::exact`]
//! exists solely as the oracle these evaluations are tested against.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigUint, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, for_each_chain, monomial_exps, render_term, PolyQ, PolylogKind, Rational};
use crate::indices::Index;

/// Trial-division primality check for the desk-scale primes swept here.
pub fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

fn check_precision(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroPrecision);
    }
    Ok(())
}

fn modulus_of(p: u64, n: u32) -> BigUint {
    BigUint::from(p).pow(n)
}

/// An element of Z/p^n Z with its modulus carried explicitly. Arithmetic
/// refuses to combine residues with different (p, n).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    p: u64,
    n: u32,
    value: BigUint,
}

impl Residue {
    pub fn new(p: u64, n: u32, value: u64) -> Result<Self> {
        check_prime(p)?;
        check_precision(n)?;
        Ok(Self::make(p, n, BigUint::from(value)))
    }

    pub fn from_biguint(p: u64, n: u32, value: BigUint) -> Result<Self> {
        check_prime(p)?;
        check_precision(n)?;
        Ok(Self::make(p, n, value))
    }

    pub fn from_bigint(p: u64, n: u32, value: &BigInt) -> Result<Self> {
        check_prime(p)?;
        check_precision(n)?;
        let m = BigInt::from(modulus_of(p, n));
        let v = value.mod_floor(&m);
        Ok(Residue {
            p,
            n,
            value: v.to_biguint().expect("mod_floor is nonnegative"),
        })
    }

    pub fn zero(p: u64, n: u32) -> Result<Self> {
        Residue::new(p, n, 0)
    }

    pub fn one(p: u64, n: u32) -> Result<Self> {
        Residue::new(p, n, 1)
    }

    /// p^i as an element of Z/p^n (zero once i >= n).
    pub fn p_power(p: u64, n: u32, i: u32) -> Result<Self> {
        Residue::from_biguint(p, n, BigUint::from(p).pow(i))
    }

    pub(crate) fn make(p: u64, n: u32, value: BigUint) -> Self {
        let m = modulus_of(p, n);
        Residue {
            p,
            n,
            value: value % m,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> BigUint {
        modulus_of(self.p, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn assert_same(&self, other: &Residue) {
        assert!(
            self.p == other.p && self.n == other.n,
            "mixed moduli: ({}, {}) vs ({}, {})",
            self.p,
            self.n,
            other.p,
            other.n
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Residue> {
        let m = BigInt::from(self.modulus());
        let a = BigInt::from(self.value.clone());
        let e = a.extended_gcd(&m);
        if !e.gcd.is_one() {
            return Err(Error::NonUnit {
                value: self.value.to_string(),
                p: self.p,
                n: self.n,
            });
        }
        let x = e.x.mod_floor(&m);
        Ok(Residue {
            p: self.p,
            n: self.n,
            value: x.to_biguint().expect("mod_floor is nonnegative"),
        })
    }

    pub fn pow(&self, e: u64) -> Residue {
        Residue {
            p: self.p,
            n: self.n,
            value: self.value.modpow(&BigUint::from(e), &self.modulus()),
        }
    }

    /// Reduce to a smaller precision n' <= n.
    pub fn truncate(&self, n: u32) -> Result<Residue> {
        check_precision(n)?;
        assert!(n <= self.n, "truncate only lowers precision");
        Ok(Residue::make(self.p, n, self.value.clone()))
    }
}

impl Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.assert_same(rhs);
        Residue::make(self.p, self.n, &self.value + &rhs.value)
    }
}

impl Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.assert_same(rhs);
        Residue::make(self.p, self.n, &self.value + self.modulus() - &rhs.value)
    }
}

impl Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.assert_same(rhs);
        Residue::make(self.p, self.n, &self.value * &rhs.value)
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::make(self.p, self.n, self.modulus() - &self.value)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The reduction Z_(p) -> Z/p^n of a rational with p-free denominator.
pub fn residue_from_rational(q: &Rational, p: u64, n: u32) -> Result<Residue> {
    check_prime(p)?;
    check_precision(n)?;
    let den = q.denom();
    if den.mod_floor(&BigInt::from(p)).is_zero() {
        return Err(Error::NonIntegral {
            den: den.to_string(),
            p,
        });
    }
    let num = Residue::from_bigint(p, n, q.numer())?;
    let den = Residue::from_bigint(p, n, den)?;
    Ok(&num * &den.inv()?)
}

/// Exact integer binomial C(top, bottom) reduced mod p^n. The binomial is
/// computed over the integers first; it may well be divisible by p.
pub fn binom_mod(top: u64, bottom: u64, p: u64, n: u32) -> Result<Residue> {
    check_prime(p)?;
    check_precision(n)?;
    Ok(Residue::make(p, n, binomial(top, bottom)))
}

/// Inverses of 1..p-1 mod p^n; slot v holds v^{-1}, slot 0 is unused.
pub(crate) fn inverse_table(p: u64, n: u32) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); p as usize];
    for v in 1..p {
        let r = Residue::make(p, n, BigUint::from(v));
        table[v as usize] = r.inv().expect("1 <= v < p is a unit").value;
    }
    table
}

fn zeta_dp(p: u64, n: u32, k: &Index, strict: bool) -> Residue {
    let top = (p - 1) as usize;
    let m = modulus_of(p, n);
    let inv = inverse_table(p, n);
    // s[u] = the partial sum over chains bounded by u for the parts handled
    // so far; the empty tail contributes 1.
    let mut s: Vec<BigUint> = vec![BigUint::one(); top + 1];
    for &kj in k.parts().iter().rev() {
        let mut next: Vec<BigUint> = Vec::with_capacity(top + 1);
        next.push(BigUint::zero());
        let mut run = BigUint::zero();
        for v in 1..=top {
            let vp = inv[v].modpow(&BigUint::from(kj), &m);
            let tail = if strict { &s[v - 1] } else { &s[v] };
            run = (run + vp * tail) % &m;
            next.push(run.clone());
        }
        s = next;
    }
    Residue {
        p,
        n,
        value: s[top].clone(),
    }
}

/// zeta_{p-1}(k) evaluated directly in Z/p^n.
pub fn zeta_mod(p: u64, n: u32, k: &Index) -> Result<Residue> {
    check_prime(p)?;
    check_precision(n)?;
    Ok(zeta_dp(p, n, k, true))
}

/// zeta*_{p-1}(k) evaluated directly in Z/p^n.
pub fn zeta_star_mod(p: u64, n: u32, k: &Index) -> Result<Residue> {
    check_prime(p)?;
    check_precision(n)?;
    Ok(zeta_dp(p, n, k, false))
}

/// Sparse multivariate Laurent polynomial with Z/p^n coefficients. Negative
/// exponents are allowed; they arise from the t^{-1} substitutions of the
/// reversal expansion and disappear after the (t_1...t_m)^p factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMod {
    p: u64,
    n: u32,
    vars: usize,
    terms: BTreeMap<Vec<i64>, BigUint>,
}

/// Per-variable substitution targets for [`PolyMod::substitute`].
#[derive(Clone, Debug)]
pub enum Assignment {
    Keep,
    Const(Residue),
    /// t_j -> 1 - t_j.
    OneMinus,
    /// t_j -> t_j^{-1}.
    Inverse,
}

impl PolyMod {
    pub fn zero(p: u64, n: u32, vars: usize) -> Result<Self> {
        check_prime(p)?;
        check_precision(n)?;
        Ok(Self::zero_raw(p, n, vars))
    }

    pub(crate) fn zero_raw(p: u64, n: u32, vars: usize) -> Self {
        PolyMod {
            p,
            n,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: &Residue) -> Self {
        let mut poly = Self::zero_raw(c.p(), c.precision(), vars);
        poly.add_term_raw(vec![0; vars], c.value().clone());
        poly
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn modulus(&self) -> BigUint {
        modulus_of(self.p, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigUint)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of the given exponent tuple (zero if absent).
    pub fn coefficient(&self, exps: &[i64]) -> Residue {
        let value = self.terms.get(exps).cloned().unwrap_or_default();
        Residue {
            p: self.p,
            n: self.n,
            value,
        }
    }

    pub fn constant_term(&self) -> Residue {
        self.coefficient(&vec![0; self.vars])
    }

    pub fn add_term(&mut self, exps: Vec<i64>, value: u64) {
        self.add_term_raw(exps, BigUint::from(value));
    }

    pub(crate) fn add_term_raw(&mut self, exps: Vec<i64>, value: BigUint) {
        assert_eq!(exps.len(), self.vars, "exponent tuple length mismatch");
        let m = self.modulus();
        let value = value % &m;
        if value.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = (o.get() + value) % &m;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &PolyMod) {
        assert!(
            self.p == other.p && self.n == other.n,
            "mixed moduli: ({}, {}) vs ({}, {})",
            self.p,
            self.n,
            other.p,
            other.n
        );
        assert_eq!(self.vars, other.vars, "variable count mismatch");
    }

    pub fn add(&self, other: &PolyMod) -> PolyMod {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term_raw(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyMod) -> PolyMod {
        self.assert_compatible(other);
        let m = self.modulus();
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term_raw(e.clone(), &m - c);
        }
        out
    }

    pub fn neg(&self) -> PolyMod {
        let m = self.modulus();
        let mut out = Self::zero_raw(self.p, self.n, self.vars);
        for (e, c) in &self.terms {
            out.add_term_raw(e.clone(), &m - c);
        }
        out
    }

    pub fn scale(&self, c: &Residue) -> PolyMod {
        assert!(
            self.p == c.p() && self.n == c.precision(),
            "mixed moduli in scale"
        );
        let mut out = Self::zero_raw(self.p, self.n, self.vars);
        for (e, v) in &self.terms {
            out.add_term_raw(e.clone(), v * c.value());
        }
        out
    }

    pub fn mul(&self, other: &PolyMod) -> PolyMod {
        self.assert_compatible(other);
        let mut out = Self::zero_raw(self.p, self.n, self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term_raw(exps, ca * cb);
            }
        }
        out
    }

    /// Simultaneous substitution, one assignment per variable. Substituting
    /// zero (or any non-unit) into a variable carrying a negative exponent is
    /// an error, as is 1 - t_j on a negative exponent.
    pub fn substitute(&self, assignments: &[Assignment]) -> Result<PolyMod> {
        assert_eq!(assignments.len(), self.vars, "one assignment per variable");
        for a in assignments {
            if let Assignment::Const(c) = a {
                if c.p() != self.p || c.precision() != self.n {
                    return Err(Error::ModulusMismatch {
                        p_left: self.p,
                        n_left: self.n,
                        p_right: c.p(),
                        n_right: c.precision(),
                    });
                }
            }
        }
        let m = self.modulus();
        let mut out = Self::zero_raw(self.p, self.n, self.vars);
        for (exps, coeff) in &self.terms {
            let mut base = vec![0i64; self.vars];
            let mut cur = coeff.clone();
            let mut vanishes = false;
            let mut expansions: Vec<(usize, i64)> = Vec::new();
            for (j, &e) in exps.iter().enumerate() {
                match &assignments[j] {
                    Assignment::Keep => base[j] += e,
                    Assignment::Inverse => base[j] -= e,
                    Assignment::OneMinus => {
                        if e < 0 {
                            return Err(Error::OneMinusNegativePower);
                        }
                        if e > 0 {
                            expansions.push((j, e));
                        }
                    }
                    Assignment::Const(c) => {
                        if e > 0 {
                            if c.is_zero() {
                                vanishes = true;
                            } else {
                                cur = cur * c.value().modpow(&BigUint::from(e as u64), &m) % &m;
                            }
                        } else if e < 0 {
                            if c.is_zero() {
                                return Err(Error::ZeroToNegativePower);
                            }
                            let cinv = c.inv()?;
                            cur = cur
                                * cinv.value().modpow(&BigUint::from((-e) as u64), &m)
                                % &m;
                        }
                    }
                }
            }
            if vanishes || cur.is_zero() {
                continue;
            }
            let mut partial: Vec<(Vec<i64>, BigUint)> = vec![(base, cur)];
            for (j, e) in expansions {
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for i in 0..=e {
                    let mut c_i = binomial(e as u64, i as u64) % &m;
                    if i % 2 == 1 && !c_i.is_zero() {
                        c_i = &m - c_i;
                    }
                    if c_i.is_zero() {
                        continue;
                    }
                    for (b, v) in &partial {
                        let mut nb = b.clone();
                        nb[j] += i;
                        next.push((nb, v * &c_i % &m));
                    }
                }
                partial = next;
            }
            for (b, v) in partial {
                out.add_term_raw(b, v);
            }
        }
        Ok(out)
    }

    /// Remove the listed variables (each must have exponent zero in every
    /// term), renumbering the survivors in order.
    pub fn drop_vars(&self, drop: &[usize]) -> Result<PolyMod> {
        let mut dropped = vec![false; self.vars];
        for &j in drop {
            dropped[j] = true;
        }
        for exps in self.terms.keys() {
            for (j, &e) in exps.iter().enumerate() {
                if dropped[j] && e != 0 {
                    return Err(Error::VarInUse { var: j });
                }
            }
        }
        let kept: Vec<usize> = (0..self.vars).filter(|j| !dropped[*j]).collect();
        let mut out = Self::zero_raw(self.p, self.n, kept.len());
        for (exps, c) in &self.terms {
            let new_exps: Vec<i64> = kept.iter().map(|&j| exps[j]).collect();
            out.add_term_raw(new_exps, c.clone());
        }
        Ok(out)
    }

    /// The variable map t_j -> t_{m+1-j}^{-1}: exponent tuples are reversed
    /// and negated. This is the argument tuple of the reversal expansion.
    pub fn reverse_and_invert_vars(&self) -> PolyMod {
        let mut out = Self::zero_raw(self.p, self.n, self.vars);
        for (exps, c) in &self.terms {
            let new_exps: Vec<i64> = exps.iter().rev().map(|&e| -e).collect();
            out.add_term_raw(new_exps, c.clone());
        }
        out
    }

    /// Multiplication by (t_1 ... t_m)^delta.
    pub fn shift_exponents(&self, delta: i64) -> PolyMod {
        let mut out = Self::zero_raw(self.p, self.n, self.vars);
        for (exps, c) in &self.terms {
            let new_exps: Vec<i64> = exps.iter().map(|&e| e + delta).collect();
            out.add_term_raw(new_exps, c.clone());
        }
        out
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|exps| exps.iter().any(|&e| e < 0))
    }

    /// Reduce every coefficient to a smaller precision n' <= n.
    pub fn reduce_precision(&self, n: u32) -> Result<PolyMod> {
        check_precision(n)?;
        assert!(n <= self.n, "reduce_precision only lowers precision");
        let mut out = Self::zero_raw(self.p, n, self.vars);
        for (exps, c) in &self.terms {
            out.add_term_raw(exps.clone(), c.clone());
        }
        Ok(out)
    }

    /// Value at t_1 = ... = t_m = 1 (the sum of all coefficients).
    pub fn eval_all_ones(&self) -> Residue {
        let m = self.modulus();
        let mut total = BigUint::zero();
        for c in self.terms.values() {
            total = (total + c) % &m;
        }
        Residue {
            p: self.p,
            n: self.n,
            value: total,
        }
    }
}

impl fmt::Display for PolyMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<i64>, &BigUint)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().sum();
            let db: i64 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        let rendered: Vec<String> = terms
            .iter()
            .map(|(exps, c)| render_term(&c.to_string(), c.is_one(), exps))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// The truncated polylogarithm at level p - 1 with coefficients in Z/p^n;
/// per-variable degrees stay below p.
pub fn polylog_mod(kind: PolylogKind, p: u64, n: u32, k: &Index) -> Result<PolyMod> {
    check_prime(p)?;
    check_precision(n)?;
    let m = modulus_of(p, n);
    let inv = inverse_table(p, n);
    let mut poly = PolyMod::zero_raw(p, n, k.depth());
    for_each_chain(p - 1, k.depth(), kind.strict(), &mut |chain| {
        let mut coeff = BigUint::one();
        for (&v, &e) in chain.iter().zip(k.parts()) {
            coeff = coeff * inv[v as usize].modpow(&BigUint::from(e), &m) % &m;
        }
        poly.add_term_raw(monomial_exps(kind, chain), coeff);
    });
    Ok(poly)
}

/// Reduce an exact rational polynomial coefficientwise into Z/p^n.
pub fn reduce_poly(f: &PolyQ, p: u64, n: u32) -> Result<PolyMod> {
    check_prime(p)?;
    check_precision(n)?;
    let mut out = PolyMod::zero_raw(p, n, f.vars());
    for (exps, c) in f.terms() {
        let r = residue_from_rational(c, p, n)?;
        out.add_term_raw(exps.to_vec(), r.value().clone());
    }
    Ok(out)
}
