//! The symmetrized basis: full averages over letter arrangements.
//!
//! `Sym(A^i B^j C^k)` is the average of all n! permutations of the letters,
//! normal-ordered. Equal arrangements are grouped, so the expansion costs one
//! reduction per distinct arrangement; the literal n!-fold enumeration is
//! kept as an independent oracle for tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::Result;
use crate::rational::Rat;
use crate::series::ZSeries;

use super::element::{AlgElement, Gen, Monomial, Word};
use super::table::CommutatorTable;

/// Ordered-basis expansion of a single symmetrized monomial.
pub fn sym_expansion(m: Monomial, table: &CommutatorTable) -> AlgElement {
    let n = table.truncation_order();
    if m.degree() <= 1 {
        return AlgElement::monomial(m, n);
    }
    let arrangements = multiset_arrangements(&m);
    let count = Rat::from_integer(BigInt::from(arrangements.len() as u64));
    let mut sum = AlgElement::zero(n);
    for w in &arrangements {
        sum = sum.add(&table.normal_order(w)).expect("matching truncation");
    }
    sum.scale(&count.recip())
}

/// Same value as [`sym_expansion`], by brute enumeration of all n!
/// permutations (duplicates included). Independent oracle.
pub fn sym_expansion_brute(m: Monomial, table: &CommutatorTable) -> AlgElement {
    let n = table.truncation_order();
    let word = m.word();
    let mut sum = AlgElement::zero(n);
    let mut perm = word.clone();
    let mut count: u64 = 0;
    permute(&mut perm, 0, &mut |w| {
        sum = sum.add(&table.normal_order(w)).expect("matching truncation");
        count += 1;
    });
    sum.scale(&Rat::from_integer(BigInt::from(count.max(1))).recip())
}

fn permute(word: &mut Word, k: usize, visit: &mut impl FnMut(&[Gen])) {
    if k == word.len() {
        visit(word);
        return;
    }
    for i in k..word.len() {
        word.swap(k, i);
        permute(word, k + 1, visit);
        word.swap(k, i);
    }
}

fn multiset_arrangements(m: &Monomial) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts = [m.a, m.b, m.c];
    let mut cur = Vec::with_capacity(m.degree() as usize);
    fn rec(counts: &mut [u32; 3], cur: &mut Word, out: &mut Vec<Word>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for g in Gen::ALL {
            let i = g.index();
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(g);
                rec(counts, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    rec(&mut counts, &mut cur, &mut out);
    out
}

/// Read `x` as coefficients over symmetrized monomials and expand onto the
/// ordered basis.
pub fn sym_to_ordered(x: &AlgElement, table: &CommutatorTable) -> Result<AlgElement> {
    let mut out = AlgElement::zero(x.truncation_order());
    let mut cache: BTreeMap<Monomial, AlgElement> = BTreeMap::new();
    for (m, s) in x.terms() {
        let exp = cache
            .entry(*m)
            .or_insert_with(|| sym_expansion(*m, table));
        out = out.add(&exp.scale_series(s))?;
    }
    Ok(out)
}

/// Invert [`sym_to_ordered`]: write an ordered-basis element on the
/// symmetrized basis. The change of basis is unitriangular per z-layer
/// (each `Sym(M)` is `M` plus lower-degree and higher-z corrections), so the
/// inversion is an exact greedy elimination.
pub fn ordered_to_sym(x: &AlgElement, table: &CommutatorTable) -> Result<AlgElement> {
    let n = x.truncation_order();
    let mut remaining = x.clone();
    let mut result = AlgElement::zero(n);
    let mut cache: BTreeMap<Monomial, AlgElement> = BTreeMap::new();
    for layer in 0..=n {
        while let Some((m, c)) = remaining.z_layer(layer).into_iter().next_back() {
            let exp = cache
                .entry(m)
                .or_insert_with(|| sym_expansion(m, table))
                .clone();
            let coeff = ZSeries::monomial(c, layer, n);
            result.add_series(m, coeff.clone());
            remaining = remaining.sub(&exp.scale_series(&coeff))?;
        }
    }
    debug_assert!(remaining.is_zero());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    /// [A,B] = B, everything else zero.
    fn borel_table(n: usize) -> CommutatorTable {
        let ab = AlgElement::generator(Gen::B, n);
        CommutatorTable::new(ab, AlgElement::zero(n), AlgElement::zero(n)).unwrap()
    }

    #[test]
    fn sym_ab_is_ab_minus_half_b() {
        // Sym(AB) = (AB + BA)/2 = AB - [A,B]/2 = AB - B/2
        let t = borel_table(2);
        let e = sym_expansion(Monomial::new(1, 1, 0), &t);
        let mut expect = AlgElement::monomial(Monomial::new(1, 1, 0), 2);
        expect.add_series(
            Monomial::gen(Gen::B),
            ZSeries::constant(crate::poly::ParamPoly::constant(ratio(-1, 2)), 2),
        );
        assert_eq!(e, expect);
    }

    #[test]
    fn sym_is_identity_on_single_generator_powers() {
        let t = borel_table(2);
        for k in 0..=5 {
            let m = Monomial::new(k, 0, 0);
            assert_eq!(sym_expansion(m, &t), AlgElement::monomial(m, 2));
        }
        let m = Monomial::new(0, 4, 0);
        assert_eq!(sym_expansion(m, &t), AlgElement::monomial(m, 2));
    }

    #[test]
    fn brute_oracle_agrees() {
        let t = borel_table(3);
        for m in [
            Monomial::new(1, 1, 0),
            Monomial::new(2, 1, 0),
            Monomial::new(1, 1, 1),
            Monomial::new(2, 1, 1),
            Monomial::new(3, 1, 0),
        ] {
            assert_eq!(sym_expansion(m, &t), sym_expansion_brute(m, &t), "{m}");
        }
    }

    #[test]
    fn round_trip_is_identity() {
        let t = borel_table(3);
        for m in [
            Monomial::new(1, 1, 0),
            Monomial::new(2, 1, 1),
            Monomial::new(0, 2, 2),
            Monomial::new(3, 2, 0),
        ] {
            let x = AlgElement::monomial(m, 3).scale(&rat(3));
            let ordered = sym_to_ordered(&x, &t).unwrap();
            let back = ordered_to_sym(&ordered, &t).unwrap();
            assert_eq!(back, x, "{m}");
        }
    }
}
