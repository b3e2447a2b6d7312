//! The classification pipeline: Wirtinger coloring of a Gauss diagram by
//! the reduced free group, longitudes, the conjugating automorphism, the
//! table of Milnor numbers, link-homotopy equivalence, and the constructive
//! realization of arbitrary admissible invariant values.
//!
//! Arcs of a strand are the intervals cut at arrow heads; tails never split
//! arcs. The bottom arc of strand `i` is colored `x_i`, and above each head
//! of sign `ε` with over-arc color `c` the color is the conjugate by `c^ε`
//! of the color below. The coloring is the unique fixpoint of this rule; it
//! is computed by sweeping every strand bottom to top and repeating until a
//! full sweep changes nothing in `RF_n`, which nilpotency guarantees after
//! at most `n+1` sweeps.
//!
//! Each arc stores both a word and its Magnus expansion; the expansion is
//! updated algebraically alongside the word, so fixpoint detection and the
//! Milnor table never have to re-expand long words.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::aut::ConjAut;
use crate::gauss::GaussDiagram;
use crate::magnus::{
    conjugate_expansion, expand, rf_equal, word_from_expansion, Monomial, ReducedPoly,
};
use crate::word::{Sign, Word};
use crate::{Error, Result};

/// Arc words longer than this are replaced by the canonical representative
/// reconstructed from their expansion, which bounds growth during sweeps.
const WORD_SHORTEN_THRESHOLD: usize = 256;

/// Strand processing order within a sweep. The fixpoint is unique, so any
/// order converges to the same coloring; exposing the choice lets tests
/// confirm that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepOrder {
    Ascending,
    Descending,
}

#[derive(Debug, Clone)]
struct ArcColor {
    word: Word,
    expansion: ReducedPoly,
}

/// The `RF_n`-coloring of a diagram: one value per arc, indexed by strand
/// and arc number (0 = bottom arc).
#[derive(Debug, Clone)]
pub struct Coloring {
    n: usize,
    sweeps: usize,
    arcs: Vec<Vec<ArcColor>>,
}

impl Coloring {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sweeps executed until a full sweep left every arc unchanged.
    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// Number of arcs on a strand (heads + 1).
    pub fn arc_count(&self, strand: usize) -> usize {
        self.arcs[strand - 1].len()
    }

    /// The color of an arc as a word (a representative of its `RF_n` class).
    pub fn word(&self, strand: usize, arc: usize) -> &Word {
        &self.arcs[strand - 1][arc].word
    }

    /// The Magnus expansion of the arc color.
    pub fn expansion(&self, strand: usize, arc: usize) -> &ReducedPoly {
        &self.arcs[strand - 1][arc].expansion
    }
}

/// Computes the unique coloring, sweeping strands in ascending order.
/// Panics if no fixpoint is reached within `n+1` sweeps (that would be a
/// bug, not an input condition).
pub fn color(d: &GaussDiagram) -> Result<Coloring> {
    color_with(d, SweepOrder::Ascending)
}

/// [`color`] with an explicit strand sweep order.
pub fn color_with(d: &GaussDiagram, order: SweepOrder) -> Result<Coloring> {
    let n = d.n();
    let strands: Vec<usize> = match order {
        SweepOrder::Ascending => (1..=n).collect(),
        SweepOrder::Descending => (1..=n).rev().collect(),
    };
    let mut arcs: Vec<Vec<ArcColor>> = Vec::with_capacity(n);
    for s in 1..=n {
        let word = Word::generator(s, n)?;
        let expansion = expand(&word);
        let count = d.heads_on(s).len() + 1;
        arcs.push(
            (0..count)
                .map(|_| ArcColor {
                    word: word.clone(),
                    expansion: expansion.clone(),
                })
                .collect(),
        );
    }
    let heads: Vec<Vec<(usize, usize)>> = (1..=n).map(|s| d.heads_on(s)).collect();
    for sweep in 1..=n + 1 {
        let mut changed = false;
        for &s in &strands {
            for (k, &(_, arrow_idx)) in heads[s - 1].iter().enumerate() {
                let arrow = &d.arrows()[arrow_idx];
                let t = arrow.tail;
                let t_arc = d.arc_index(t.strand, t.pos);
                let over = &arcs[t.strand - 1][t_arc];
                let (conj_word, conj_poly) = match arrow.sign {
                    Sign::Plus => (over.word.clone(), over.expansion.clone()),
                    Sign::Minus => (
                        over.word.inverse(),
                        over.expansion
                            .inverse()
                            .expect("arc expansions are invertible"),
                    ),
                };
                let below = &arcs[s - 1][k];
                let new_expansion = conjugate_expansion(&below.expansion, &conj_poly);
                if new_expansion != arcs[s - 1][k + 1].expansion {
                    changed = true;
                    let mut word = arcs[s - 1][k].word.conjugated_by(&conj_word)?;
                    if word.len() > WORD_SHORTEN_THRESHOLD {
                        word = word_from_expansion(&new_expansion)
                            .expect("arc expansions are group-like");
                    }
                    arcs[s - 1][k + 1] = ArcColor {
                        word,
                        expansion: new_expansion,
                    };
                }
            }
        }
        if !changed {
            return Ok(Coloring {
                n,
                sweeps: sweep,
                arcs,
            });
        }
    }
    panic!("coloring did not stabilize within n+1 sweeps");
}

fn longitude_words(d: &GaussDiagram, coloring: &Coloring) -> Result<Vec<Word>> {
    let n = d.n();
    let mut out = Vec::with_capacity(n);
    for s in 1..=n {
        let mut lambda = Word::empty(n);
        for (_, arrow_idx) in d.heads_on(s) {
            let arrow = &d.arrows()[arrow_idx];
            let t = arrow.tail;
            let over = coloring.word(t.strand, d.arc_index(t.strand, t.pos));
            let factor = match arrow.sign {
                Sign::Plus => over.clone(),
                Sign::Minus => over.inverse(),
            };
            lambda = lambda.product(&factor)?;
        }
        out.push(lambda);
    }
    Ok(out)
}

fn longitude_expansions(d: &GaussDiagram, coloring: &Coloring) -> Result<Vec<ReducedPoly>> {
    let n = d.n();
    let mut out = Vec::with_capacity(n);
    for s in 1..=n {
        let mut acc = ReducedPoly::one(n);
        for (_, arrow_idx) in d.heads_on(s) {
            let arrow = &d.arrows()[arrow_idx];
            let t = arrow.tail;
            let over = coloring.expansion(t.strand, d.arc_index(t.strand, t.pos));
            let factor = match arrow.sign {
                Sign::Plus => over.clone(),
                Sign::Minus => over.inverse().expect("arc expansions are invertible"),
            };
            acc = acc.mul(&factor)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// The `i`th longitude: the product, over the heads on strand `i` from
/// bottom to top, of the over-arc color raised to the crossing sign.
pub fn longitude(d: &GaussDiagram, strand: usize) -> Result<Word> {
    if strand == 0 || strand > d.n() {
        return Err(Error::StrandOutOfRange { strand, n: d.n() });
    }
    let coloring = color(d)?;
    Ok(longitude_words(d, &coloring)?.swap_remove(strand - 1))
}

/// The conjugating automorphism of the diagram: conjugators are the
/// longitudes.
pub fn phi(d: &GaussDiagram) -> Result<ConjAut> {
    let coloring = color(d)?;
    ConjAut::new(d.n(), longitude_words(d, &coloring)?)
}

/// A Milnor index: a sequence of at least two pairwise distinct strand
/// indices. The last entry names the strand whose longitude is expanded.
/// Ordered by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MilnorIndex {
    seq: Vec<usize>,
}

impl Ord for MilnorIndex {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.seq
            .len()
            .cmp(&other.seq.len())
            .then_with(|| self.seq.cmp(&other.seq))
    }
}

impl PartialOrd for MilnorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl MilnorIndex {
    pub fn new(seq: Vec<usize>, n: usize) -> Result<MilnorIndex> {
        if seq.len() < 2 {
            return Err(Error::BadMilnorIndex(alloc::format!(
                "need at least 2 indices, got {}",
                seq.len()
            )));
        }
        if seq.len() > n {
            return Err(Error::BadMilnorIndex(alloc::format!(
                "{} indices on {n} strands cannot be pairwise distinct",
                seq.len()
            )));
        }
        for (k, &i) in seq.iter().enumerate() {
            if i == 0 || i > n {
                return Err(Error::BadMilnorIndex(alloc::format!(
                    "index {i} out of range 1..={n}"
                )));
            }
            if seq[..k].contains(&i) {
                return Err(Error::BadMilnorIndex(alloc::format!("repeated index {i}")));
            }
        }
        Ok(MilnorIndex { seq })
    }

    /// All valid indices for `n` strands, in length-then-lex order.
    pub fn all(n: usize) -> Vec<MilnorIndex> {
        fn extend(n: usize, prefix: &mut Vec<usize>, len: usize, out: &mut Vec<MilnorIndex>) {
            if prefix.len() == len {
                out.push(MilnorIndex {
                    seq: prefix.clone(),
                });
                return;
            }
            for i in 1..=n {
                if !prefix.contains(&i) {
                    prefix.push(i);
                    extend(n, prefix, len, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        for len in 2..=n {
            extend(n, &mut Vec::new(), len, &mut out);
        }
        out
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// The strand whose longitude is read (the last entry).
    pub fn target_strand(&self) -> usize {
        *self.seq.last().expect("length >= 2")
    }

    /// The monomial `X_{i1}...X_{ik}` formed by all but the last entry.
    fn monomial(&self, n: usize) -> Result<Monomial> {
        Monomial::new(self.seq[..self.seq.len() - 1].to_vec(), n)
    }
}

impl fmt::Display for MilnorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.seq {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// The Milnor number `mu_I` of the diagram: the coefficient of
/// `X_{i1}...X_{ik}` in the expansion of the `x_i`-killed `i`th longitude,
/// for `I = i1...ik i`.
pub fn mu(d: &GaussDiagram, index: &MilnorIndex) -> Result<BigInt> {
    let n = d.n();
    if index.seq.iter().any(|&i| i > n) {
        return Err(Error::BadMilnorIndex(alloc::format!(
            "index exceeds strand count {n}"
        )));
    }
    let target = index.target_strand();
    let lambda = longitude(d, target)?;
    let reduced = lambda.kill_generator(target);
    expand(&reduced).coefficient(&index.monomial(n)?)
}

/// The complete table of Milnor numbers with non-repeating indices: the
/// full link-homotopy classification datum of the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuTable {
    n: usize,
    entries: Vec<(MilnorIndex, BigInt)>,
}

impl MuTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(MilnorIndex, BigInt)] {
        &self.entries
    }

    pub fn get(&self, index: &MilnorIndex) -> Option<&BigInt> {
        self.entries
            .iter()
            .find(|(i, _)| i == index)
            .map(|(_, v)| v)
    }
}

impl fmt::Display for MuTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (index, value) in &self.entries {
            writeln!(f, "mu {index} = {value}")?;
        }
        Ok(())
    }
}

/// Computes every Milnor number of the diagram. Entries are sorted by
/// index length, then lexicographically.
pub fn mu_table(d: &GaussDiagram) -> Result<MuTable> {
    let n = d.n();
    let coloring = color(d)?;
    let lambdas = longitude_expansions(d, &coloring)?;
    let killed: Vec<ReducedPoly> = (1..=n).map(|i| lambdas[i - 1].kill_variable(i)).collect();
    let mut entries = Vec::new();
    for index in MilnorIndex::all(n) {
        let value = killed[index.target_strand() - 1].coefficient(&index.monomial(n)?)?;
        entries.push((index, value));
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(MuTable { n, entries })
}

/// Link-homotopy equivalence: equality of the complete Milnor tables
/// (equivalently, of the conjugating automorphisms).
pub fn lh_equivalent(d1: &GaussDiagram, d2: &GaussDiagram) -> Result<bool> {
    if d1.n() != d2.n() {
        return Err(Error::ArityMismatch {
            left: d1.n(),
            right: d2.n(),
        });
    }
    Ok(mu_table(d1)? == mu_table(d2)?)
}

/// Builds a diagram whose reduced longitudes are exactly the given words.
///
/// `targets[i-1]` must not contain the letter `x_i`. For each letter
/// `y^ε` of the target for strand `i`, an arrow of sign `ε` is created with
/// its head on strand `i` and its tail at the bottom of strand `y`; tails
/// sit below every head of their strand, so they are colored by the bottom
/// meridians and the longitude of strand `i` reads off the target verbatim.
/// The construction is verified through [`phi`] before it is returned.
pub fn realize(targets: &[Word]) -> Result<GaussDiagram> {
    let n = targets.len();
    for (k, t) in targets.iter().enumerate() {
        if t.n() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: t.n(),
            });
        }
        if t.letters().iter().any(|l| l.gen == k + 1) {
            return Err(Error::TargetUsesOwnMeridian { strand: k + 1 });
        }
    }
    let mut tail_count = alloc::vec![0usize; n + 1];
    for t in targets {
        for l in t.letters() {
            tail_count[l.gen] += 1;
        }
    }
    let mut next_tail = alloc::vec![1usize; n + 1];
    let mut arrows = Vec::new();
    for (k, t) in targets.iter().enumerate() {
        let strand = k + 1;
        for (pos, l) in t.letters().iter().enumerate() {
            let tail = crate::gauss::Endpoint::new(l.gen, next_tail[l.gen]);
            next_tail[l.gen] += 1;
            let head = crate::gauss::Endpoint::new(strand, tail_count[strand] + pos + 1);
            arrows.push(crate::gauss::Arrow::new(tail, head, l.sign));
        }
    }
    let d = GaussDiagram::new(n, arrows)?;
    let a = phi(&d)?;
    for (k, t) in targets.iter().enumerate() {
        let ok = rf_equal(&a.normal_conjugator(k + 1), t)?;
        assert!(
            ok,
            "realized diagram failed verification for strand {}",
            k + 1
        );
    }
    Ok(d)
}

/// The number of Milnor invariants and the rank of the group they cut out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCount {
    /// `Σ_{k=2..n} binom(n,k) k!`: all non-repeating indices of length
    /// `2..=n`.
    pub total: BigUint,
    /// `Σ_{k=2..n} n! / ((n-k)! (k-1))`: the rank of the group of
    /// `n`-strand links up to link-homotopy.
    pub rank: BigUint,
}

/// Evaluates both closed forms exactly.
pub fn invariant_count(n: usize) -> Result<InvariantCount> {
    if n < 1 {
        return Err(Error::InvalidStrandCount { n });
    }
    let mut total = BigUint::zero();
    let mut rank = BigUint::zero();
    for k in 2..=n {
        // falling factorial n (n-1) ... (n-k+1) = n!/(n-k)!
        let mut falling = BigUint::one();
        for j in 0..k {
            falling *= BigUint::from(n - j);
        }
        total += &falling;
        rank += falling / BigUint::from(k - 1);
    }
    Ok(InvariantCount { total, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{Arrow, Endpoint, MoveKind};
    use crate::word::Letter;
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    fn arrow(ts: usize, tp: usize, hs: usize, hp: usize, sign: Sign) -> Arrow {
        Arrow::new(Endpoint::new(ts, tp), Endpoint::new(hs, hp), sign)
    }

    fn single_positive() -> GaussDiagram {
        GaussDiagram::new(2, alloc::vec![arrow(1, 1, 2, 1, Sign::Plus)]).unwrap()
    }

    /// tail 2.2 -> head 1.1 (+), tail 1.2 -> head 2.1 (+)
    fn cyclic_pair() -> GaussDiagram {
        GaussDiagram::new(
            2,
            alloc::vec![arrow(2, 2, 1, 1, Sign::Plus), arrow(1, 2, 2, 1, Sign::Plus)],
        )
        .unwrap()
    }

    fn index(seq: &[usize], n: usize) -> MilnorIndex {
        MilnorIndex::new(seq.to_vec(), n).unwrap()
    }

    #[test]
    fn trivial_diagram_coloring() {
        let c = color(&GaussDiagram::trivial(3)).unwrap();
        assert_eq!(c.sweeps(), 1);
        for s in 1..=3 {
            assert_eq!(c.arc_count(s), 1);
            assert_eq!(c.word(s, 0), &Word::generator(s, 3).unwrap());
        }
    }

    #[test]
    fn single_arrow_coloring() {
        let c = color(&single_positive()).unwrap();
        assert_eq!(c.word(2, 1), &w("x1^-1 x2 x1", 2));
    }

    #[test]
    fn cyclic_pair_coloring_reaches_fixpoint() {
        let d = cyclic_pair();
        let c = color(&d).unwrap();
        assert!(c.sweeps() <= 3);
        assert!(rf_equal(c.word(1, 1), &w("x2^-1 x1 x2", 2)).unwrap());
        assert!(rf_equal(c.word(2, 1), &w("x1^-1 x2 x1", 2)).unwrap());
    }

    #[test]
    fn coloring_is_sweep_order_independent() {
        let d = cyclic_pair();
        let asc = color_with(&d, SweepOrder::Ascending).unwrap();
        let desc = color_with(&d, SweepOrder::Descending).unwrap();
        for s in 1..=2 {
            for a in 0..asc.arc_count(s) {
                assert_eq!(asc.expansion(s, a), desc.expansion(s, a));
            }
        }
    }

    #[test]
    fn head_relations_hold_at_fixpoint() {
        let d = cyclic_pair();
        let c = color(&d).unwrap();
        for a in d.arrows() {
            let t_arc = d.arc_index(a.tail.strand, a.tail.pos);
            let over = c.word(a.tail.strand, t_arc);
            let conj = match a.sign {
                Sign::Plus => over.clone(),
                Sign::Minus => over.inverse(),
            };
            let below_arc = d.arc_index(a.head.strand, a.head.pos);
            let below = c.word(a.head.strand, below_arc);
            let above = c.word(a.head.strand, below_arc + 1);
            assert!(rf_equal(above, &below.conjugated_by(&conj).unwrap()).unwrap());
        }
    }

    #[test]
    fn longitude_examples() {
        let trivial = GaussDiagram::trivial(2);
        assert!(longitude(&trivial, 1).unwrap().is_empty());
        assert!(longitude(&trivial, 2).unwrap().is_empty());

        let d = single_positive();
        assert_eq!(longitude(&d, 2).unwrap(), w("x1", 2));
        assert!(longitude(&d, 1).unwrap().is_empty());

        let doubled = d.stack(&d).unwrap();
        assert_eq!(longitude(&doubled, 2).unwrap(), w("x1 x1", 2));
    }

    #[test]
    fn phi_examples() {
        let id = phi(&GaussDiagram::trivial(2)).unwrap();
        assert!(id.aut_equal(&ConjAut::identity(2)).unwrap());

        let a = phi(&single_positive()).unwrap();
        assert_eq!(a.conjugator(2), &w("x1", 2));
        assert!(a.conjugator(1).is_empty());
    }

    #[test]
    fn one_strand_diagrams_are_trivial() {
        // a kink and a double self-arrow
        for arrows in [
            alloc::vec![arrow(1, 1, 1, 2, Sign::Plus)],
            alloc::vec![
                arrow(1, 1, 1, 3, Sign::Minus),
                arrow(1, 2, 1, 4, Sign::Plus)
            ],
        ] {
            let d = GaussDiagram::new(1, arrows).unwrap();
            let a = phi(&d).unwrap();
            assert!(a.aut_equal(&ConjAut::identity(1)).unwrap());
            assert!(mu_table(&d).unwrap().entries().is_empty());
        }
    }

    #[test]
    fn mu_examples() {
        let d = single_positive();
        assert_eq!(mu(&d, &index(&[1, 2], 2)).unwrap(), BigInt::from(1));
        assert_eq!(mu(&d, &index(&[2, 1], 2)).unwrap(), BigInt::from(0));

        for idx in MilnorIndex::all(3) {
            assert_eq!(
                mu(&GaussDiagram::trivial(3), &idx).unwrap(),
                BigInt::from(0)
            );
        }
    }

    #[test]
    fn mu_rejects_bad_indices() {
        assert!(MilnorIndex::new(alloc::vec![1, 1, 2], 3).is_err());
        assert!(MilnorIndex::new(alloc::vec![1], 3).is_err());
        assert!(MilnorIndex::new(alloc::vec![1, 4], 3).is_err());
        assert!(MilnorIndex::new(alloc::vec![1, 2, 3], 2).is_err());
    }

    #[test]
    fn mu_table_examples() {
        let t3 = mu_table(&GaussDiagram::trivial(3)).unwrap();
        assert_eq!(t3.entries().len(), 12);
        assert!(t3.entries().iter().all(|(_, v)| *v == BigInt::from(0)));
        let order: Vec<String> = t3
            .entries()
            .iter()
            .map(|(i, _)| alloc::format!("{i}"))
            .collect();
        assert_eq!(
            order,
            ["12", "13", "21", "23", "31", "32", "123", "132", "213", "231", "312", "321"]
        );

        let t = mu_table(&single_positive()).unwrap();
        assert_eq!(t.get(&index(&[1, 2], 2)), Some(&BigInt::from(1)));
        assert_eq!(t.get(&index(&[2, 1], 2)), Some(&BigInt::from(0)));

        let tc = mu_table(&cyclic_pair()).unwrap();
        assert_eq!(tc.get(&index(&[1, 2], 2)), Some(&BigInt::from(1)));
        assert_eq!(tc.get(&index(&[2, 1], 2)), Some(&BigInt::from(1)));
    }

    #[test]
    fn mu_table_agrees_with_mu() {
        let d = cyclic_pair().stack(&single_positive()).unwrap();
        let table = mu_table(&d).unwrap();
        for (idx, value) in table.entries() {
            assert_eq!(&mu(&d, idx).unwrap(), value);
        }
    }

    #[test]
    fn kill_variable_matches_word_kill() {
        let word = w("x1 x3^-1 x2 x1 x3", 3);
        assert_eq!(
            expand(&word.kill_generator(3)),
            expand(&word).kill_variable(3)
        );
    }

    #[test]
    fn lh_equivalent_examples() {
        let d = single_positive();
        assert!(!lh_equivalent(&GaussDiagram::trivial(2), &d).unwrap());
        assert!(lh_equivalent(&d, &d.stack(&GaussDiagram::trivial(2)).unwrap()).unwrap());

        // deleting a self-arrow is invisible to the invariants
        let with_kink = d
            .apply_move(&crate::gauss::MoveSpec::R1Insert {
                strand: 1,
                at: 1,
                sign: Sign::Minus,
                tail_first: false,
            })
            .unwrap();
        assert!(lh_equivalent(&d, &with_kink).unwrap());
    }

    #[test]
    fn realize_examples() {
        let trivial = realize(&[Word::empty(2), Word::empty(2)]).unwrap();
        assert_eq!(trivial, GaussDiagram::trivial(2));

        let d = realize(&[Word::empty(2), w("x1", 2)]).unwrap();
        assert_eq!(d, single_positive());

        let commutator =
            realize(&[Word::empty(3), Word::empty(3), w("x1^-1 x2^-1 x1 x2", 3)]).unwrap();
        assert_eq!(commutator.arrows().len(), 4);
        let t = mu_table(&commutator).unwrap();
        assert_eq!(t.get(&index(&[1, 2, 3], 3)), Some(&BigInt::from(1)));
        assert_eq!(t.get(&index(&[2, 1, 3], 3)), Some(&BigInt::from(-1)));
        for (idx, v) in t.entries() {
            if idx.seq().len() == 2 {
                assert_eq!(*v, BigInt::from(0), "mu {idx}");
            }
        }
    }

    #[test]
    fn realize_rejects_own_meridian() {
        assert!(matches!(
            realize(&[w("x1", 2), Word::empty(2)]),
            Err(Error::TargetUsesOwnMeridian { strand: 1 })
        ));
    }

    #[test]
    fn invariant_count_values() {
        // independent oracle for the total: enumerate the indices
        for n in 1..=5 {
            let c = invariant_count(n).unwrap();
            assert_eq!(c.total, BigUint::from(MilnorIndex::all(n).len()));
        }
        let pairs = [(2usize, (2u32, 2u32)), (3, (12, 9)), (4, (60, 32))];
        for (n, (total, rank)) in pairs {
            let c = invariant_count(n).unwrap();
            assert_eq!(c.total, BigUint::from(total));
            assert_eq!(c.rank, BigUint::from(rank));
        }
        assert!(invariant_count(0).is_err());
        assert!(invariant_count(1).unwrap().total.is_zero());
    }

    fn small_diagram_strategy(n: usize, max_arrows: usize) -> impl Strategy<Value = GaussDiagram> {
        proptest::collection::vec((1..=n, 1..=n, any::<bool>()), 0..=max_arrows).prop_map(
            move |plan| {
                // endpoints appended per strand keep every slot unique
                let mut next = alloc::vec![1usize; n + 1];
                let mut arrows = Vec::new();
                for (ts, hs, s) in plan {
                    let tail = Endpoint::new(ts, next[ts]);
                    next[ts] += 1;
                    let head = Endpoint::new(hs, next[hs]);
                    next[hs] += 1;
                    arrows.push(Arrow::new(
                        tail,
                        head,
                        if s { Sign::Plus } else { Sign::Minus },
                    ));
                }
                GaussDiagram::new(n, arrows).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn stacking_is_a_homomorphism(
            d1 in small_diagram_strategy(3, 5),
            d2 in small_diagram_strategy(3, 5),
        ) {
            let stacked = d1.stack(&d2).unwrap();
            let composed = phi(&d1).unwrap().compose_stack(&phi(&d2).unwrap()).unwrap();
            prop_assert!(phi(&stacked).unwrap().aut_equal(&composed).unwrap());
        }

        #[test]
        fn deleting_all_self_arrows_preserves_mu(d in small_diagram_strategy(3, 6)) {
            let table = mu_table(&d).unwrap();
            let mut stripped = d.clone();
            while let Some(spec) = stripped.enumerate_moves(MoveKind::Sv).first().copied() {
                stripped = stripped.apply_move(&spec).unwrap();
            }
            prop_assert_eq!(mu_table(&stripped).unwrap(), table);
        }

        #[test]
        fn coloring_words_match_expansions(d in small_diagram_strategy(3, 6)) {
            let c = color(&d).unwrap();
            for s in 1..=3 {
                for a in 0..c.arc_count(s) {
                    prop_assert_eq!(&expand(c.word(s, a)), c.expansion(s, a));
                }
            }
        }

        #[test]
        fn realization_round_trips(
            t1 in proptest::collection::vec((1..=3usize, any::<bool>()), 0..4),
            t2 in proptest::collection::vec((1..=3usize, any::<bool>()), 0..4),
            t3 in proptest::collection::vec((1..=3usize, any::<bool>()), 0..4),
        ) {
            let n = 3;
            let mk = |plan: Vec<(usize, bool)>, own: usize| {
                Word::reduce(
                    plan.into_iter()
                        .filter(|(g, _)| *g != own)
                        .map(|(g, s)| Letter::new(g, if s { Sign::Plus } else { Sign::Minus })),
                    n,
                )
                .unwrap()
            };
            let targets = [mk(t1, 1), mk(t2, 2), mk(t3, 3)];
            let d = realize(&targets).unwrap();
            let table = mu_table(&d).unwrap();
            // direct route: coefficients of the target expansions
            for (idx, value) in table.entries() {
                let target = &targets[idx.target_strand() - 1];
                let mono = Monomial::new(
                    idx.seq()[..idx.seq().len() - 1].to_vec(),
                    n,
                ).unwrap();
                prop_assert_eq!(&expand(target).coefficient(&mono).unwrap(), value);
            }
        }
    }
}
