//! Truncated p-power series and the per-prime congruence checks.
//!
//! Every identity here lives naturally in a ring where a statement means
//! "congruent mod p^n for all but finitely many primes"; the checks realize
//! each one as an exact congruence at a single (p, n) with an explicit
//! witness on failure. Truncation rule throughout: mod p^n a series
//! sum_i X_i p^i is the finite sum over 0 <= i <= n-1, since every X_i in
//! scope is p-integral and p^i vanishes mod p^n for i >= n.

use std::time::Instant;

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, for_each_chain, monomial_exps, PolylogKind};
use crate::indices::{enumerate_nonneg_tuples, Index};
use crate::modp::{
    binom_mod, check_prime, inverse_table, polylog_mod, zeta_star_mod, Assignment, PolyMod,
    Residue,
};
use crate::report::{params, CheckReport, ParamValue};

fn half(p: u64, n: u32) -> Result<Residue> {
    if p == 2 {
        return Err(Error::HalfAtTwo);
    }
    Residue::new(p, n, 2)?.inv()
}

fn require_odd(p: u64) -> Result<()> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::HalfAtTwo);
    }
    Ok(())
}

/// The polylogarithm of the given kind on ({1}^i, k) with the i leading
/// variables evaluated at 1 and removed; dep(k) variables remain.
fn prefix_ones_polylog(
    kind: PolylogKind,
    p: u64,
    n: u32,
    i: usize,
    k: &Index,
) -> Result<PolyMod> {
    let full = polylog_mod(kind, p, n, &k.prepend_ones(i))?;
    if i == 0 {
        return Ok(full);
    }
    let one = Residue::one(p, n)?;
    let mut assigns = vec![Assignment::Keep; i + k.depth()];
    for slot in assigns.iter_mut().take(i) {
        *slot = Assignment::Const(one.clone());
    }
    let drops: Vec<usize> = (0..i).collect();
    full.substitute(&assigns)?.drop_vars(&drops)
}

/// sum_{i < n} zeta*_{p-1}({1}^i, k) p^i in Z/p^n.
pub fn dual_sum_star(p: u64, n: u32, k: &Index) -> Result<Residue> {
    let mut acc = Residue::zero(p, n)?;
    for i in 0..n {
        let z = zeta_star_mod(p, n, &k.prepend_ones(i as usize))?;
        acc = &acc + &(&z * &Residue::p_power(p, n, i)?);
    }
    Ok(acc)
}

/// Star duality of the dual sums: the sums for k and its Hoffman dual add to
/// zero mod p^n. At n = 1 this is the classical star duality; the n = 2 part
/// is its symmetric two-level form. Runs at p = 2 as well, flagged as
/// outside the proof hypotheses.
pub fn check_padic_duality(p: u64, n: u32, k: &Index) -> Result<CheckReport> {
    let t0 = Instant::now();
    let total = &dual_sum_star(p, n, k)? + &dual_sum_star(p, n, &k.hoffman_dual())?;
    let mut pars = params([
        ("index", ParamValue::Str(k.to_string())),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    if p == 2 {
        pars.insert(
            "note".to_string(),
            ParamValue::Str("outside proof hypotheses".to_string()),
        );
    }
    Ok(CheckReport::finish(
        "padic_duality",
        pars,
        total.is_zero(),
        total,
        t0,
    ))
}

/// The truncated star series in dep(k) variables:
/// sum_{i < n} (L*_{({1}^i, k)}({1}^i, t) - 1/2 L*_{({1}^i, k)}({1}^i, t_1)) p^i,
/// where the polylogarithms are of shuffle-star kind and t_1 sets the last
/// variable to 1. Requires p odd for the 1/2.
pub fn l_star(p: u64, n: u32, k: &Index) -> Result<PolyMod> {
    require_odd(p)?;
    let m = k.depth();
    let h = half(p, n)?;
    let one = Residue::one(p, n)?;
    let mut acc = PolyMod::zero(p, n, m)?;
    for i in 0..n {
        let f = prefix_ones_polylog(PolylogKind::ShuffleStar, p, n, i as usize, k)?;
        let mut assigns = vec![Assignment::Keep; m];
        assigns[m - 1] = Assignment::Const(one.clone());
        let g = f.substitute(&assigns)?;
        let term = f.sub(&g.scale(&h));
        acc = acc.add(&term.scale(&Residue::p_power(p, n, i)?));
    }
    Ok(acc)
}

/// Reflection symmetry of the all-ones star series:
/// the series on ({1}^w) is invariant under every t_j -> 1 - t_j.
pub fn check_reflection_all_ones(p: u64, n: u32, w: u32) -> Result<CheckReport> {
    reflection_check("reflection_all_ones", p, n, w)
}

/// The same computation at a fixed level n; kept as a separately named check
/// so reports distinguish the limit statement from its leveled form.
pub fn check_reflection_leveled(p: u64, n: u32, w: u32) -> Result<CheckReport> {
    reflection_check("reflection_leveled", p, n, w)
}

fn reflection_check(name: &str, p: u64, n: u32, w: u32) -> Result<CheckReport> {
    let t0 = Instant::now();
    let lhs = l_star(p, n, &Index::ones(w as usize))?;
    let rhs = lhs.substitute(&vec![Assignment::OneMinus; w as usize])?;
    let pars = params([
        ("w", ParamValue::Int(w as i64)),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    let diff = lhs.sub(&rhs);
    Ok(CheckReport::finish(name, pars, diff.is_zero(), diff, t0))
}

/// Both sides of the one-variable dual equation: for each i the tilde
/// polylogarithm (variable in the last slot, harmonic-star kind) minus half
/// its value at 1, weighted by p^i; the dual side is evaluated at 1 - t.
pub fn one_var_dual_sides(p: u64, n: u32, k: &Index) -> Result<(PolyMod, PolyMod)> {
    require_odd(p)?;
    let h = half(p, n)?;
    let mut lhs = PolyMod::zero(p, n, 1)?;
    let mut rhs = PolyMod::zero(p, n, 1)?;
    let dual = k.hoffman_dual();
    for i in 0..n {
        let pi = Residue::p_power(p, n, i)?;
        let f = last_slot_polylog(p, n, i as usize, k)?;
        let zeta = f.eval_all_ones();
        let term = f.sub(&PolyMod::constant(1, &(&h * &zeta)));
        lhs = lhs.add(&term.scale(&pi));

        let g = last_slot_polylog(p, n, i as usize, &dual)?;
        let zeta = g.eval_all_ones();
        let reflected = g.substitute(&[Assignment::OneMinus])?;
        let term = reflected.sub(&PolyMod::constant(1, &(&h * &zeta)));
        rhs = rhs.add(&term.scale(&pi));
    }
    Ok((lhs, rhs))
}

/// Harmonic-star polylogarithm on ({1}^i, k) with every variable except the
/// last evaluated at 1; one free variable remains.
fn last_slot_polylog(p: u64, n: u32, i: usize, k: &Index) -> Result<PolyMod> {
    let full = polylog_mod(PolylogKind::HarmonicStar, p, n, &k.prepend_ones(i))?;
    let total = i + k.depth();
    let one = Residue::one(p, n)?;
    let mut assigns = vec![Assignment::Const(one); total];
    assigns[total - 1] = Assignment::Keep;
    let drops: Vec<usize> = (0..total - 1).collect();
    full.substitute(&assigns)?.drop_vars(&drops)
}

/// One-variable dual equation between k and its Hoffman dual.
pub fn check_one_var_duality(p: u64, n: u32, k: &Index) -> Result<CheckReport> {
    let t0 = Instant::now();
    let (lhs, rhs) = one_var_dual_sides(p, n, k)?;
    let pars = params([
        ("index", ParamValue::Str(k.to_string())),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    let diff = lhs.sub(&rhs);
    Ok(CheckReport::finish(
        "one_var_duality",
        pars,
        diff.is_zero(),
        diff,
        t0,
    ))
}

/// Both sides of the multi-variable dual equation for blocks k_1, ..., k_r:
/// the star series of the concatenation, specialized to one free variable
/// per block (the block's last slot, earlier slots at 1); the dual side uses
/// the blockwise Hoffman duals at 1 - t.
pub fn multi_var_dual_sides(p: u64, n: u32, blocks: &[Index]) -> Result<(PolyMod, PolyMod)> {
    require_odd(p)?;
    assert!(!blocks.is_empty(), "at least one block");
    let concat = |parts: &[Index]| {
        let mut it = parts.iter();
        let mut k = it.next().expect("nonempty").clone();
        for b in it {
            k = k.concat(b);
        }
        k
    };
    let k = concat(blocks);
    let duals: Vec<Index> = blocks.iter().map(Index::hoffman_dual).collect();
    let kd = concat(&duals);

    let lhs = select_block_lasts(&l_star(p, n, &k)?, blocks, false)?;
    let rhs = select_block_lasts(&l_star(p, n, &kd)?, &duals, true)?;
    Ok((lhs, rhs))
}

/// In each block keep only the last variable (optionally as 1 - t), setting
/// the preceding slots to 1; the result has one variable per block.
fn select_block_lasts(poly: &PolyMod, blocks: &[Index], one_minus: bool) -> Result<PolyMod> {
    let one = Residue::one(poly.p(), poly.precision())?;
    let mut assigns = Vec::with_capacity(poly.vars());
    let mut drops = Vec::new();
    let mut pos = 0usize;
    for block in blocks {
        for _ in 0..block.depth() - 1 {
            assigns.push(Assignment::Const(one.clone()));
            drops.push(pos);
            pos += 1;
        }
        assigns.push(if one_minus {
            Assignment::OneMinus
        } else {
            Assignment::Keep
        });
        pos += 1;
    }
    assert_eq!(pos, poly.vars(), "blocks must cover every variable");
    poly.substitute(&assigns)?.drop_vars(&drops)
}

/// Multi-variable dual equation over a sequence of index blocks.
pub fn check_multi_var_duality(p: u64, n: u32, blocks: &[Index]) -> Result<CheckReport> {
    let t0 = Instant::now();
    let (lhs, rhs) = multi_var_dual_sides(p, n, blocks)?;
    let rendered: Vec<String> = blocks.iter().map(Index::to_string).collect();
    let pars = params([
        ("blocks", ParamValue::Str(rendered.join("|"))),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    let diff = lhs.sub(&rhs);
    Ok(CheckReport::finish(
        "multi_var_duality",
        pars,
        diff.is_zero(),
        diff,
        t0,
    ))
}

/// The right-hand side of the reversal expansion:
/// (-1)^{wt(k)} (t_1...t_m)^p sum_{i<n} p^i sum_{wt(l)=i}
/// [prod_j C(k_j + l_j - 1, l_j)] L_{k (+) l}(reversed inverted variables);
/// a genuine polynomial (the t^p factor clears every negative exponent).
pub fn reversal_rhs(p: u64, n: u32, k: &Index, star: bool) -> Result<PolyMod> {
    check_prime(p)?;
    let kind = if star {
        PolylogKind::HarmonicStar
    } else {
        PolylogKind::Harmonic
    };
    let m = k.depth();
    let mut acc = PolyMod::zero(p, n, m)?;
    for i in 0..n {
        let pi = Residue::p_power(p, n, i)?;
        for l in enumerate_nonneg_tuples(i, m) {
            let mut coeff = pi.clone();
            for (&kj, &lj) in k.parts().iter().zip(l.parts()) {
                coeff = &coeff * &binom_mod(u64::from(kj + lj) - 1, u64::from(lj), p, n)?;
            }
            let f = polylog_mod(kind, p, n, &k.oplus(&l)?)?;
            acc = acc.add(&f.reverse_and_invert_vars().scale(&coeff));
        }
    }
    if k.weight() % 2 == 1 {
        acc = acc.neg();
    }
    Ok(acc.shift_exponents(p as i64))
}

/// Reversal: the polylogarithm at the reversed index equals the binomial
/// expansion of the inverted-variable polylogarithms.
pub fn check_reversal(p: u64, n: u32, k: &Index, star: bool) -> Result<CheckReport> {
    let t0 = Instant::now();
    let kind = if star {
        PolylogKind::HarmonicStar
    } else {
        PolylogKind::Harmonic
    };
    let lhs = polylog_mod(kind, p, n, &k.reverse())?;
    let rhs = reversal_rhs(p, n, k, star)?;
    let pars = params([
        ("index", ParamValue::Str(k.to_string())),
        ("star", ParamValue::Str(star.to_string())),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    let diff = lhs.sub(&rhs);
    Ok(CheckReport::finish(
        "reversal",
        pars,
        diff.is_zero(),
        diff,
        t0,
    ))
}

/// Both sides of the binomial expansion at 1 <= arg < p:
/// (-1)^arg C(p-1, arg) against
/// (-1)^{p-1} (1 - p/arg) sum_{i<n} p^i sum_{p-1 >= m_1 >= ... >= m_i >= arg}
/// 1/(m_1 ... m_i).
pub fn binom_expansion_sides(p: u64, n: u32, arg: u64) -> Result<(Residue, Residue)> {
    check_prime(p)?;
    if arg == 0 || arg >= p {
        return Err(Error::ArgOutOfRange { arg, p });
    }
    let mut lhs = binom_mod(p - 1, arg, p, n)?;
    if arg % 2 == 1 {
        lhs = -&lhs;
    }

    let top = (p - 1) as usize;
    let modulus = Residue::zero(p, n)?.modulus();
    let inv = inverse_table(p, n);
    // g[v] = sum over weakly decreasing chains of the current length with
    // values in [v, p-1] of the product of inverses; length 0 gives 1.
    let mut g: Vec<BigUint> = vec![BigUint::one(); top + 2];
    g[0] = BigUint::zero();
    let mut series = Residue::one(p, n)?;
    for i in 1..n {
        let mut next = vec![BigUint::zero(); top + 2];
        for v in (1..=top).rev() {
            next[v] = (&next[v + 1] + &inv[v] * &g[v]) % &modulus;
        }
        g = next;
        let layer = Residue::from_biguint(p, n, g[arg as usize].clone())?;
        series = &series + &(&layer * &Residue::p_power(p, n, i)?);
    }

    let p_res = Residue::from_biguint(p, n, BigUint::from(p))?;
    let arg_inv = Residue::from_biguint(p, n, BigUint::from(arg))?.inv()?;
    let mut factor = &Residue::one(p, n)? - &(&p_res * &arg_inv);
    if (p - 1) % 2 == 1 {
        factor = -&factor;
    }
    Ok((lhs, &factor * &series))
}

/// Congruence check for the binomial expansion.
pub fn check_binom_expansion(p: u64, n: u32, arg: u64) -> Result<CheckReport> {
    let t0 = Instant::now();
    let (lhs, rhs) = binom_expansion_sides(p, n, arg)?;
    let pars = params([
        ("arg", ParamValue::Int(arg as i64)),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    let diff = &lhs - &rhs;
    Ok(CheckReport::finish(
        "binom_expansion",
        pars,
        diff.is_zero(),
        diff,
        t0,
    ))
}

/// The alternating C(p-1, n_1)-weighted shuffle-star sum in w variables
/// against its polylogarithm expansion with the weight-2 correction layers.
pub fn check_binom_polylog_sum(p: u64, n: u32, w: u32) -> Result<CheckReport> {
    require_odd(p)?;
    let t0 = Instant::now();
    let w = w as usize;
    let modulus = Residue::zero(p, n)?.modulus();
    let inv = inverse_table(p, n);

    let mut lhs = PolyMod::zero(p, n, w)?;
    for_each_chain(p - 1, w, false, &mut |chain| {
        let mut coeff = binomial(p - 1, chain[0]) % &modulus;
        for &v in chain {
            coeff = coeff * &inv[v as usize] % &modulus;
        }
        if chain[0] % 2 == 1 && !coeff.is_zero() {
            coeff = &modulus - coeff;
        }
        let exps = monomial_exps(PolylogKind::ShuffleStar, chain);
        lhs.add_term_raw(exps, coeff);
    });

    let ones = Index::ones(w);
    let mut rhs = polylog_mod(PolylogKind::ShuffleStar, p, n, &ones)?;
    for i in 1..n {
        let a = prefix_ones_polylog(PolylogKind::ShuffleStar, p, n, i as usize, &ones)?;
        let mut corr_parts = vec![2u32];
        corr_parts.extend(std::iter::repeat(1).take(w - 1));
        let corr = Index::new(corr_parts).expect("positive parts");
        let b = prefix_ones_polylog(PolylogKind::ShuffleStar, p, n, i as usize - 1, &corr)?;
        rhs = rhs.add(&a.sub(&b).scale(&Residue::p_power(p, n, i)?));
    }

    let pars = params([
        ("w", ParamValue::Int(w as i64)),
        ("p", ParamValue::Int(p as i64)),
        ("n", ParamValue::Int(n as i64)),
    ]);
    let diff = lhs.sub(&rhs);
    Ok(CheckReport::finish(
        "binom_polylog_sum",
        pars,
        diff.is_zero(),
        diff,
        t0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::indices_up_to_weight;
    use crate::modp::reduce_poly;

    fn res(p: u64, n: u32, v: u64) -> Residue {
        Residue::new(p, n, v).unwrap()
    }

    fn poly(p: u64, n: u32, terms: &[(i64, u64)]) -> PolyMod {
        let mut f = PolyMod::zero(p, n, 1).unwrap();
        for &(e, c) in terms {
            f.add_term(vec![e], c);
        }
        f
    }

    #[test]
    fn dual_sums() {
        assert!(dual_sum_star(5, 1, &Index::of(&[2])).unwrap().is_zero());
        assert_eq!(dual_sum_star(5, 2, &Index::of(&[2])).unwrap(), res(5, 2, 15));
        assert_eq!(
            dual_sum_star(5, 2, &Index::of(&[1, 1])).unwrap(),
            res(5, 2, 10)
        );
    }

    #[test]
    fn padic_duality_examples() {
        assert!(check_padic_duality(5, 2, &Index::of(&[2])).unwrap().pass);
        assert!(check_padic_duality(5, 1, &Index::of(&[2, 1])).unwrap().pass);
        assert!(check_padic_duality(7, 1, &Index::of(&[1])).unwrap().pass);
    }

    #[test]
    fn padic_duality_at_two_is_flagged() {
        let r = check_padic_duality(2, 1, &Index::of(&[1])).unwrap();
        assert_eq!(
            r.params.get("note"),
            Some(&ParamValue::Str("outside proof hypotheses".into()))
        );
    }

    #[test]
    fn l_star_values() {
        assert_eq!(
            l_star(3, 1, &Index::of(&[1])).unwrap(),
            poly(3, 1, &[(1, 1), (2, 2)])
        );
        assert_eq!(
            l_star(3, 1, &Index::of(&[2])).unwrap(),
            poly(3, 1, &[(0, 2), (1, 1), (2, 1)])
        );
        assert_eq!(l_star(2, 1, &Index::of(&[1])), Err(Error::HalfAtTwo));
    }

    #[test]
    fn reflection_examples() {
        let r = check_reflection_all_ones(3, 1, 1).unwrap();
        assert!(r.pass, "witness: {:?}", r.witness);
        assert!(check_reflection_all_ones(5, 1, 2).unwrap().pass);
        assert!(check_reflection_all_ones(3, 2, 1).unwrap().pass);
        assert!(check_reflection_leveled(5, 2, 1).unwrap().pass);
        assert_eq!(check_reflection_all_ones(2, 1, 1), Err(Error::HalfAtTwo));
    }

    #[test]
    fn one_var_duality_pinned_instance() {
        // p=3, n=1, k=(2): both sides are t^2 + t + 2.
        let (lhs, rhs) = one_var_dual_sides(3, 1, &Index::of(&[2])).unwrap();
        let expect = poly(3, 1, &[(2, 1), (1, 1), (0, 2)]);
        assert_eq!(lhs, expect);
        assert_eq!(rhs, expect);
        assert!(check_one_var_duality(3, 1, &Index::of(&[1])).unwrap().pass);
        assert!(check_one_var_duality(5, 2, &Index::of(&[2, 1])).unwrap().pass);
    }

    #[test]
    fn multi_var_duality_examples() {
        // A single block reduces to the one-variable equation.
        let r = check_multi_var_duality(3, 1, &[Index::of(&[2])]).unwrap();
        assert!(r.pass, "witness: {:?}", r.witness);
        let (lhs, _) = multi_var_dual_sides(3, 1, &[Index::of(&[2])]).unwrap();
        assert_eq!(lhs, poly(3, 1, &[(2, 1), (1, 1), (0, 2)]));

        assert!(check_multi_var_duality(3, 1, &[Index::of(&[1])]).unwrap().pass);
        assert!(
            check_multi_var_duality(5, 2, &[Index::of(&[1]), Index::of(&[2])])
                .unwrap()
                .pass
        );
    }

    #[test]
    fn reversal_examples() {
        let lhs = polylog_mod(PolylogKind::Harmonic, 3, 1, &Index::of(&[1])).unwrap();
        let rhs = reversal_rhs(3, 1, &Index::of(&[1]), false).unwrap();
        assert_eq!(lhs, poly(3, 1, &[(1, 1), (2, 2)]));
        assert_eq!(rhs, lhs);
        assert!(!rhs.has_negative_exponent());

        assert!(check_reversal(5, 1, &Index::of(&[2]), true).unwrap().pass);
        assert!(check_reversal(5, 2, &Index::of(&[1, 1]), false).unwrap().pass);
    }

    #[test]
    fn binom_expansion_examples() {
        let (lhs, rhs) = binom_expansion_sides(5, 1, 1).unwrap();
        assert_eq!(lhs, res(5, 1, 1));
        assert_eq!(rhs, res(5, 1, 1));

        let (lhs, rhs) = binom_expansion_sides(5, 2, 2).unwrap();
        assert_eq!(lhs, res(5, 2, 6));
        assert_eq!(rhs, res(5, 2, 6));

        assert!(check_binom_expansion(7, 3, 3).unwrap().pass);
        assert_eq!(
            check_binom_expansion(5, 1, 5),
            Err(Error::ArgOutOfRange { arg: 5, p: 5 })
        );
    }

    #[test]
    fn binom_polylog_sum_examples() {
        assert!(check_binom_polylog_sum(3, 1, 1).unwrap().pass);
        assert!(check_binom_polylog_sum(3, 2, 1).unwrap().pass);
        assert!(check_binom_polylog_sum(5, 2, 2).unwrap().pass);
        assert_eq!(check_binom_polylog_sum(2, 1, 1), Err(Error::HalfAtTwo));
    }

    #[test]
    fn series_truncation_is_sound() {
        // Recomputing at precision n+1 and reducing mod p^n reproduces the
        // precision-n series.
        for p in [3u64, 5, 7, 11] {
            for k in indices_up_to_weight(3) {
                for n in 1..=2u32 {
                    let wide = dual_sum_star(p, n + 1, &k).unwrap();
                    let narrow = dual_sum_star(p, n, &k).unwrap();
                    assert_eq!(wide.truncate(n).unwrap(), narrow, "p={p}, k={k}, n={n}");

                    let wide = l_star(p, n + 1, &k).unwrap();
                    let narrow = l_star(p, n, &k).unwrap();
                    assert_eq!(
                        wide.reduce_precision(n).unwrap(),
                        narrow,
                        "p={p}, k={k}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn l_star_matches_rational_reduction_at_depth_one() {
        // Cross-check the i = 0 layer against the exact oracle.
        use crate::exact::{polylog_trunc, rat};
        for p in [3u64, 5, 7] {
            let k = Index::of(&[1]);
            let exact_poly = polylog_trunc(PolylogKind::ShuffleStar, p - 1, &k);
            let reduced = reduce_poly(&exact_poly, p, 1).unwrap();
            let half_value = crate::modp::residue_from_rational(
                &(rat(1, 2) * exact_poly.eval_all_ones()),
                p,
                1,
            )
            .unwrap();
            let expect = reduced.sub(&PolyMod::constant(1, &half_value));
            assert_eq!(l_star(p, 1, &k).unwrap(), expect, "p={p}");
        }
    }
}
