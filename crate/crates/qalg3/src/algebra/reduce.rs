//! Normal ordering by rewriting against a commutator table.
//!
//! Strategy: replace the leftmost adjacent inversion `YX` by `XY - [X,Y]_z`
//! and recurse. Termination: a swap lowers the inversion count; a table
//! insertion either carries a z-power (which lowers the remaining z budget)
//! or is a single classical letter (which lowers the B/C-degree or the word
//! length). Results are memoized per (word, budget).

use super::element::{AlgElement, Gen, Monomial, Word};
use super::table::CommutatorTable;

pub(super) struct Reducer<'t> {
    table: &'t CommutatorTable,
    truncation: usize,
}

impl<'t> Reducer<'t> {
    pub fn new(table: &'t CommutatorTable) -> Self {
        Reducer {
            table,
            truncation: table.truncation_order(),
        }
    }

    /// Normal form of `word`, exact for z-orders `<= budget`.
    pub fn reduce(&mut self, word: &[Gen], budget: usize) -> AlgElement {
        if let Some(pos) = first_inversion(word) {
            if let Some(hit) = self
                .table
                .memo
                .lock()
                .unwrap()
                .get(&(word.to_vec(), budget))
            {
                return hit.clone();
            }
            let result = self.rewrite_at(word, pos, budget);
            self.table
                .memo
                .lock()
                .unwrap()
                .insert((word.to_vec(), budget), result.clone());
            result
        } else {
            AlgElement::monomial(ordered_monomial(word), self.truncation)
        }
    }

    fn rewrite_at(&mut self, word: &[Gen], pos: usize, budget: usize) -> AlgElement {
        let hi = word[pos];
        let lo = word[pos + 1];

        let mut swapped: Word = word.to_vec();
        swapped.swap(pos, pos + 1);
        let mut result = self.reduce(&swapped, budget);

        let entry = self.table.entry(lo, hi); // [lo, hi]_z with lo < hi
        for (mon, series) in entry.terms() {
            let low = series.lowest_order().unwrap_or(self.truncation + 1);
            if low > budget {
                continue;
            }
            let mut inner: Word = Vec::with_capacity(word.len() + 2);
            inner.extend_from_slice(&word[..pos]);
            inner.extend(mon.word());
            inner.extend_from_slice(&word[pos + 2..]);
            let reduced = self.reduce(&inner, budget - low);
            result = result
                .sub(&reduced.scale_series(series))
                .expect("matching truncation");
        }
        result
    }
}

fn first_inversion(word: &[Gen]) -> Option<usize> {
    word.windows(2).position(|w| w[0] > w[1])
}

fn ordered_monomial(word: &[Gen]) -> Monomial {
    let mut m = Monomial::ONE;
    for g in word {
        match g {
            Gen::A => m.a += 1,
            Gen::B => m.b += 1,
            Gen::C => m.c += 1,
        }
    }
    m
}
