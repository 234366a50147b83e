//! The word algebra over {x, y}: y-terminated words and their indices, the
//! harmonic (quasi-shuffle) product, the substitution automorphism psi
//! (x -> x + y, y -> -y), its corrected companion
//! w -> (1 + y) (1/(1+y) * w), and the evaluation maps sending words to
//! zeta residues.
//!
//! Elements are stored in the letter alphabet, where psi acts letterwise;
//! the harmonic recursion and the evaluations work through the z-alphabet
//! (z_k = x^{k-1} y), reached by the block decomposition of a y-terminated
//! word.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num::{BigRational, BigUint, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::indices::Index;
use crate::modp::{residue_from_rational, zeta_mod, Residue};
use crate::report::{params, CheckReport, ParamValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

/// A word over {x, y}; the empty word is the algebra unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HWord {
    letters: Vec<Letter>,
}

impl HWord {
    pub fn unit() -> Self {
        HWord::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        HWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn weight(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    /// A word lies in the y-terminated subalgebra iff empty or ending in y.
    pub fn in_h1(&self) -> bool {
        self.letters.last() != Some(&Letter::X)
    }

    /// The monomial z_{k_1} ... z_{k_m} for an index.
    pub fn from_index(k: &Index) -> Self {
        let mut letters = Vec::with_capacity(k.weight() as usize);
        for &part in k.parts() {
            letters.extend(std::iter::repeat(Letter::X).take(part as usize - 1));
            letters.push(Letter::Y);
        }
        HWord { letters }
    }

    /// The index of a nonempty y-terminated word (inverse of `from_index`).
    pub fn to_index(&self) -> Result<Index> {
        if self.is_unit() || !self.in_h1() {
            return Err(Error::NotInH1);
        }
        let mut parts = Vec::new();
        let mut xs: u32 = 0;
        for &l in &self.letters {
            match l {
                Letter::X => xs += 1,
                Letter::Y => {
                    parts.push(xs + 1);
                    xs = 0;
                }
            }
        }
        Index::new(parts)
    }

    fn z_seq(&self) -> Result<Vec<u32>> {
        if self.is_unit() {
            return Ok(Vec::new());
        }
        Ok(self.to_index()?.parts().to_vec())
    }

    fn from_z_seq(seq: &[u32]) -> Self {
        if seq.is_empty() {
            return HWord::unit();
        }
        HWord::from_index(&Index::new(seq.to_vec()).expect("z-parts are positive"))
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        if self.in_h1() {
            let seq = self.z_seq().expect("y-terminated word");
            let zs: Vec<String> = seq.iter().map(|k| format!("z{k}")).collect();
            write!(f, "{}", zs.join(" "))
        } else {
            for l in &self.letters {
                write!(f, "{}", if *l == Letter::X { 'x' } else { 'y' })?;
            }
            Ok(())
        }
    }
}

/// A finite rational-linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HPoly {
    terms: BTreeMap<HWord, Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly::default()
    }

    pub fn one() -> Self {
        HPoly::word(HWord::unit())
    }

    pub fn word(w: HWord) -> Self {
        let mut poly = HPoly::zero();
        poly.add_term(w, BigRational::one());
        poly
    }

    /// The monomial z_k of an index.
    pub fn from_index(k: &Index) -> Self {
        HPoly::word(HWord::from_index(k))
    }

    pub fn constant(c: Rational) -> Self {
        let mut poly = HPoly::zero();
        poly.add_term(HWord::unit(), c);
        poly
    }

    pub fn add_term(&mut self, w: HWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&HWord, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every monomial empty or y-terminated.
    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(HWord::in_h1)
    }

    pub fn add(&self, other: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> HPoly {
        let mut out = HPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        let mut out = HPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (w, coeff) in &self.terms {
            out.add_term(w.clone(), coeff * c);
        }
        out
    }

    /// The concatenation (noncommutative) product.
    pub fn concat_mul(&self, other: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut letters = wa.letters.clone();
                letters.extend_from_slice(&wb.letters);
                out.add_term(HWord { letters }, ca * cb);
            }
        }
        out
    }

    /// Drop all monomials of weight > `maxweight`.
    pub fn truncate(&self, maxweight: u32) -> HPoly {
        let mut out = HPoly::zero();
        for (w, c) in &self.terms {
            if w.weight() <= maxweight {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&HWord, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(wa, _), (wb, _)| {
            wa.weight()
                .cmp(&wb.weight())
                .then_with(|| wa.letters.cmp(&wb.letters))
        });
        for (i, (w, c)) in terms.iter().enumerate() {
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
            if w.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

/// The letterwise automorphism x -> x + y, y -> -y, extended multiplicatively
/// and linearly. A weight-preserving involution.
pub fn psi(f: &HPoly) -> HPoly {
    let x_image = {
        let mut p = HPoly::word(HWord::new(vec![Letter::X]));
        p.add_term(HWord::new(vec![Letter::Y]), BigRational::one());
        p
    };
    let y_image = {
        let mut p = HPoly::zero();
        p.add_term(HWord::new(vec![Letter::Y]), -BigRational::one());
        p
    };
    let mut out = HPoly::zero();
    for (w, c) in f.terms() {
        let mut acc = HPoly::constant(c.clone());
        for l in w.letters() {
            let img = if *l == Letter::X { &x_image } else { &y_image };
            acc = acc.concat_mul(img);
        }
        out = out.add(&acc);
    }
    out
}

fn star_seqs(a: &[u32], b: &[u32]) -> BTreeMap<Vec<u32>, BigUint> {
    fn prepend(
        head: u32,
        tail: BTreeMap<Vec<u32>, BigUint>,
        out: &mut BTreeMap<Vec<u32>, BigUint>,
    ) {
        for (seq, c) in tail {
            let mut s = Vec::with_capacity(seq.len() + 1);
            s.push(head);
            s.extend(seq);
            *out.entry(s).or_insert_with(BigUint::zero) += c;
        }
    }
    let mut out = BTreeMap::new();
    if a.is_empty() {
        out.insert(b.to_vec(), BigUint::one());
        return out;
    }
    if b.is_empty() {
        out.insert(a.to_vec(), BigUint::one());
        return out;
    }
    prepend(a[0], star_seqs(&a[1..], b), &mut out);
    prepend(b[0], star_seqs(a, &b[1..]), &mut out);
    prepend(a[0] + b[0], star_seqs(&a[1..], &b[1..]), &mut out);
    out
}

/// The harmonic product, defined by w * 1 = 1 * w = w and
/// z_k w_1 * z_l w_2 = z_k (w_1 * z_l w_2) + z_l (z_k w_1 * w_2)
/// + z_{k+l} (w_1 * w_2); commutative and associative, weight additive.
pub fn harmonic_product(f: &HPoly, g: &HPoly) -> Result<HPoly> {
    harmonic_product_bounded(f, g, None)
}

fn harmonic_product_bounded(f: &HPoly, g: &HPoly, maxweight: Option<u32>) -> Result<HPoly> {
    if !f.in_h1() || !g.in_h1() {
        return Err(Error::NotInH1);
    }
    let mut out = HPoly::zero();
    for (wa, ca) in f.terms() {
        for (wb, cb) in g.terms() {
            if let Some(bound) = maxweight {
                if wa.weight() + wb.weight() > bound {
                    continue;
                }
            }
            let coeff = ca * cb;
            for (seq, count) in star_seqs(&wa.z_seq()?, &wb.z_seq()?) {
                let c = &coeff * BigRational::from_integer(count.into());
                out.add_term(HWord::from_z_seq(&seq), c);
            }
        }
    }
    Ok(out)
}

/// The corrected automorphism w -> (1 + y)(1/(1+y) * w), with 1/(1+y)
/// expanded as sum of (-y)^i up to `maxweight`; all output monomials of
/// weight > `maxweight` are discarded. Exact on every weight-filtered
/// evaluation that ignores weights above the bound.
pub fn phi_truncated(f: &HPoly, maxweight: u32) -> Result<HPoly> {
    if !f.in_h1() {
        return Err(Error::NotInH1);
    }
    let mut geometric = HPoly::zero();
    for i in 0..=maxweight {
        let sign = if i % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        geometric.add_term(HWord::from_z_seq(&vec![1; i as usize]), sign);
    }
    let inner = harmonic_product_bounded(&geometric, f, Some(maxweight))?;
    let mut one_plus_y = HPoly::one();
    one_plus_y.add_term(HWord::new(vec![Letter::Y]), BigRational::one());
    Ok(one_plus_y.concat_mul(&inner).truncate(maxweight))
}

/// Z_A: the unit goes to 1, z_k goes to zeta_{p-1}(k) mod p, extended
/// linearly. Errors if a coefficient denominator is divisible by p.
pub fn z_a_eval(f: &HPoly, p: u64) -> Result<Residue> {
    let mut total = Residue::zero(p, 1)?;
    for (w, c) in f.terms() {
        let coeff = residue_from_rational(c, p, 1)?;
        let value = if w.is_unit() {
            coeff
        } else {
            &coeff * &zeta_mod(p, 1, &w.to_index()?)?
        };
        total = &total + &value;
    }
    Ok(total)
}

/// The weighted evaluation into Z/p^n: only monomials of weight < n are
/// retained, z_k contributing zeta_{p-1}(k) p^{wt(k)}.
pub fn z_hat_eval(f: &HPoly, p: u64, n: u32) -> Result<Residue> {
    let mut total = Residue::zero(p, n)?;
    for (w, c) in f.terms() {
        if w.weight() >= n {
            continue;
        }
        let coeff = residue_from_rational(c, p, n)?;
        let value = if w.is_unit() {
            coeff
        } else {
            let zeta = zeta_mod(p, n, &w.to_index()?)?;
            let scale = Residue::p_power(p, n, w.weight())?;
            &(&coeff * &zeta) * &scale
        };
        total = &total + &value;
    }
    Ok(total)
}

/// Congruence check: psi(w) - w evaluates to zero under Z_A at p.
pub fn check_psi_kernel(w: &HWord, p: u64) -> Result<CheckReport> {
    let t0 = Instant::now();
    let diff = psi(&HPoly::word(w.clone())).sub(&HPoly::word(w.clone()));
    let value = z_a_eval(&diff, p)?;
    let pars = params([
        ("word", ParamValue::Str(w.to_string())),
        ("p", ParamValue::Int(p as i64)),
    ]);
    Ok(CheckReport::finish(
        "psi_kernel",
        pars,
        value.is_zero(),
        value,
        t0,
    ))
}

/// Congruence check: psi(w) - Phi(w) evaluates to zero under the weighted
/// evaluation at (p, n). Truncating Phi at weight n - 1 is exact because the
/// evaluation retains only weights below n.
pub fn check_asymptotic_duality(w: &HWord, p: u64, n: u32) -> Result<CheckReport> {
    let t0 = Instant::now();
    let poly = HPoly::word(w.clone());
    let diff = psi(&poly).sub(&phi_truncated(&poly, n.saturating_sub(1))?);
    let value = z_hat_eval(&diff, p, n)?;
    let pars = params([
        ("word", ParamValue::Str(w.to_string())),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    Ok(CheckReport::finish(
        "asymptotic_duality",
        pars,
        value.is_zero(),
        value,
        t0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, zeta_trunc};
    use crate::indices::indices_up_to_weight;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn z(parts: &[u32]) -> HPoly {
        HPoly::from_index(&Index::of(parts))
    }

    #[test]
    fn word_index_bijection() {
        assert_eq!(
            HWord::from_index(&Index::of(&[1])),
            HWord::new(vec![Letter::Y])
        );
        let w = HWord::new(vec![Letter::X, Letter::Y, Letter::Y]);
        assert_eq!(w.to_index().unwrap(), Index::of(&[2, 1]));
        assert_eq!(HWord::from_index(&Index::of(&[2, 1])), w);
        let bad = HWord::new(vec![Letter::Y, Letter::X]);
        assert_eq!(bad.to_index(), Err(Error::NotInH1));
        assert_eq!(HWord::unit().to_index(), Err(Error::NotInH1));
    }

    #[test]
    fn psi_examples() {
        let minus_z1 = z(&[1]).neg();
        assert_eq!(psi(&z(&[1])), minus_z1);

        let mut expect = z(&[2]).neg();
        expect = expect.sub(&z(&[1, 1]));
        assert_eq!(psi(&z(&[2])), expect);

        let w = z(&[2, 1]);
        assert_eq!(psi(&psi(&w)), w);
    }

    #[test]
    fn psi_is_weight_preserving_involution() {
        for k in indices_up_to_weight(6) {
            let f = HPoly::from_index(&k);
            let img = psi(&f);
            for (w, _) in img.terms() {
                assert_eq!(w.weight(), k.weight());
            }
            assert_eq!(psi(&img), f, "k = {k}");
        }
    }

    #[test]
    fn harmonic_examples() {
        let mut expect = z(&[1, 1]).scale(&rat(2, 1));
        expect = expect.add(&z(&[2]));
        assert_eq!(harmonic_product(&z(&[1]), &z(&[1])).unwrap(), expect);

        assert_eq!(harmonic_product(&z(&[1]), &HPoly::one()).unwrap(), z(&[1]));

        let expect = z(&[2, 1]).add(&z(&[1, 2])).add(&z(&[3]));
        assert_eq!(harmonic_product(&z(&[2]), &z(&[1])).unwrap(), expect);

        let not_h1 = HPoly::word(HWord::new(vec![Letter::X]));
        assert_eq!(
            harmonic_product(&not_h1, &z(&[1])),
            Err(Error::NotInH1)
        );
    }

    #[test]
    fn phi_examples() {
        for maxw in 0..=4 {
            assert_eq!(phi_truncated(&HPoly::one(), maxw).unwrap(), HPoly::one());
        }
        let expect = z(&[1]).sub(&z(&[1, 1])).sub(&z(&[2]));
        assert_eq!(phi_truncated(&z(&[1]), 2).unwrap(), expect);

        let deep = phi_truncated(&z(&[1]), 3).unwrap().truncate(2);
        assert_eq!(deep, phi_truncated(&z(&[1]), 2).unwrap());
    }

    #[test]
    fn z_a_examples() {
        assert_eq!(z_a_eval(&HPoly::one(), 7).unwrap(), Residue::one(7, 1).unwrap());
        assert!(z_a_eval(&z(&[2]), 5).unwrap().is_zero());
        let quasi = z(&[1, 1]).scale(&rat(2, 1)).add(&z(&[2]));
        assert!(z_a_eval(&quasi, 5).unwrap().is_zero());
        // p in a denominator is rejected.
        let bad = HPoly::constant(rat(1, 5));
        assert!(matches!(z_a_eval(&bad, 5), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn z_hat_examples() {
        assert!(z_hat_eval(&z(&[2]), 5, 3).unwrap().is_zero());
        assert!(z_hat_eval(&z(&[1]), 5, 2).unwrap().is_zero());
        let c = HPoly::constant(rat(7, 3));
        let want = residue_from_rational(&rat(7, 3), 5, 2).unwrap();
        assert_eq!(z_hat_eval(&c, 5, 2).unwrap(), want);
    }

    #[test]
    fn quasi_shuffle_matches_exact_products() {
        // zeta_N is multiplicative with respect to the harmonic product.
        let mut cache: HashMap<(u64, Index), Rational> = HashMap::new();
        let indices = indices_up_to_weight(4);
        for k in &indices {
            for l in &indices {
                let expansion =
                    harmonic_product(&HPoly::from_index(k), &HPoly::from_index(l)).unwrap();
                for n in 1..=12u64 {
                    let left = cache
                        .entry((n, k.clone()))
                        .or_insert_with(|| zeta_trunc(n, k))
                        .clone();
                    let right = cache
                        .entry((n, l.clone()))
                        .or_insert_with(|| zeta_trunc(n, l))
                        .clone();
                    let mut via_words = BigRational::zero();
                    for (w, c) in expansion.terms() {
                        let idx = w.to_index().unwrap();
                        let value = cache
                            .entry((n, idx.clone()))
                            .or_insert_with(|| zeta_trunc(n, &idx))
                            .clone();
                        via_words += c * value;
                    }
                    assert_eq!(left * right, via_words, "k={k}, l={l}, n={n}");
                }
            }
        }
    }

    #[test]
    fn z_a_is_an_algebra_map() {
        let indices = indices_up_to_weight(4);
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            for k in &indices {
                for l in &indices {
                    let f = HPoly::from_index(k);
                    let g = HPoly::from_index(l);
                    let prod = z_a_eval(&harmonic_product(&f, &g).unwrap(), p).unwrap();
                    let split = &z_a_eval(&f, p).unwrap() * &z_a_eval(&g, p).unwrap();
                    assert_eq!(prod, split, "p={p}, k={k}, l={l}");
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let f = z(&[2]).scale(&rat(-2, 1)).sub(&z(&[1, 1]));
        assert_eq!(f.to_string(), "-2*z2 - z1 z1");
        assert_eq!(HPoly::zero().to_string(), "0");
        assert_eq!(HPoly::one().to_string(), "1");
    }

    fn arb_h1_poly() -> impl Strategy<Value = HPoly> {
        let word = proptest::collection::vec(1u32..=3, 1..=3)
            .prop_map(|parts| HWord::from_index(&Index::new(parts).unwrap()));
        proptest::collection::vec((word, -3i64..=3), 1..=3).prop_map(|terms| {
            let mut f = HPoly::zero();
            for (w, c) in terms {
                f.add_term(w, rat(c, 1));
            }
            f
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn harmonic_commutative_associative(
            f in arb_h1_poly(),
            g in arb_h1_poly(),
            h in arb_h1_poly(),
        ) {
            let fg = harmonic_product(&f, &g).unwrap();
            let gf = harmonic_product(&g, &f).unwrap();
            prop_assert_eq!(&fg, &gf);
            let fg_h = harmonic_product(&fg, &h).unwrap();
            let f_gh = harmonic_product(&f, &harmonic_product(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(fg_h, f_gh);
        }

        #[test]
        fn psi_involution_on_sums(f in arb_h1_poly()) {
            prop_assert_eq!(psi(&psi(&f)), f);
        }
    }
}
