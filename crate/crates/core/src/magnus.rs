//! The reduced Magnus algebra and the Magnus expansion.
//!
//! The algebra is the ring of integer polynomials on noncommutative
//! variables `X_1, ..., X_n` modulo the ideal generated by monomials with a
//! repeated variable. Every surviving monomial is repeat-free, so the
//! algebra is a free abelian group of finite rank `Σ_{k=0..n} n!/(n-k)!`.
//!
//! The expansion sends `x_j` to `1 + X_j`; since `X_j X_j = 0`, the inverse
//! letter goes to the finite polynomial `1 - X_j`. The expansion kills the
//! relators `[x_i^g, x_i^h]` of the reduced free group `RF_n` (every
//! monomial of the conjugated images contains `X_i`, so their cross products
//! vanish), and it separates the elements of `RF_n`; the crate decides
//! equality in `RF_n` exclusively through [`rf_equal`]. Injectivity on the
//! full `n`-variable algebra is classical but used here as an assumption;
//! every classification decision also factors through the Milnor numbers,
//! i.e. through expansions of words in which one variable has been killed.
//!
//! Monomials are ordered graded-lexicographically, which fixes the canonical
//! text form of polynomials, e.g. `1 + X1X2 - X2X1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::word::{Sign, Word};
use crate::{left_normed_commutator, Error, Result};

/// A repeat-free monomial `X_{i1} ... X_{ik}`; the empty monomial is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    indices: Vec<usize>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn unit() -> Monomial {
        Monomial {
            indices: Vec::new(),
        }
    }

    /// Validates that the indices are pairwise distinct and within `1..=n`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Monomial> {
        for (k, &i) in indices.iter().enumerate() {
            if i == 0 || i > n {
                return Err(Error::MalformedMonomial(alloc::format!(
                    "variable index {i} out of range 1..={n}"
                )));
            }
            if indices[..k].contains(&i) {
                return Err(Error::MalformedMonomial(alloc::format!(
                    "repeated variable X{i}"
                )));
            }
        }
        Ok(Monomial { indices })
    }

    fn unchecked(indices: Vec<usize>) -> Monomial {
        Monomial { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, var: usize) -> bool {
        self.indices.contains(&var)
    }

    /// Concatenation, or `None` when the result would repeat a variable.
    fn concat(&self, rhs: &Monomial) -> Option<Monomial> {
        if self.indices.iter().any(|i| rhs.indices.contains(i)) {
            return None;
        }
        let mut indices = Vec::with_capacity(self.indices.len() + rhs.indices.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&rhs.indices);
        Some(Monomial { indices })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // graded lexicographic
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        for i in &self.indices {
            write!(f, "X{i}")?;
        }
        Ok(())
    }
}

/// An element of the reduced Magnus algebra on `n` variables.
///
/// Zero coefficients are never stored; terms are kept in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl ReducedPoly {
    pub fn zero(n: usize) -> ReducedPoly {
        ReducedPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> ReducedPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::unit(), BigInt::one());
        ReducedPoly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The stored coefficient of `m`, or zero. Rejects monomials whose
    /// variables exceed `n`.
    pub fn coefficient(&self, m: &Monomial) -> Result<BigInt> {
        for &i in m.indices() {
            if i == 0 || i > self.n {
                return Err(Error::MalformedMonomial(alloc::format!(
                    "variable index {i} out of range 1..={}",
                    self.n
                )));
            }
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(BigInt::zero))
    }

    fn check_arity(&self, rhs: &ReducedPoly) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(())
    }

    fn insert(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, rhs: &ReducedPoly) -> Result<ReducedPoly> {
        self.check_arity(rhs)?;
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::insert(&mut terms, m.clone(), c.clone());
        }
        Ok(ReducedPoly { n: self.n, terms })
    }

    pub fn neg(&self) -> ReducedPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        ReducedPoly { n: self.n, terms }
    }

    pub fn sub(&self, rhs: &ReducedPoly) -> Result<ReducedPoly> {
        self.add(&rhs.neg())
    }

    /// Noncommutative product; concatenated monomials with a repeated
    /// variable are discarded.
    pub fn mul(&self, rhs: &ReducedPoly) -> Result<ReducedPoly> {
        self.check_arity(rhs)?;
        let mut terms = BTreeMap::new();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                if let Some(m) = ml.concat(mr) {
                    Self::insert(&mut terms, m, cl * cr);
                }
            }
        }
        Ok(ReducedPoly { n: self.n, terms })
    }

    /// Drops every monomial containing `var`: the coefficient-level image
    /// of killing the generator `x_var` in a word before expanding.
    pub fn kill_variable(&self, var: usize) -> ReducedPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| !m.contains(var))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        ReducedPoly { n: self.n, terms }
    }

    /// Multiplicative inverse, defined when the constant term is `±1`:
    /// the Neumann series of the nilpotent part, which stops at degree `n`.
    pub fn inverse(&self) -> Option<ReducedPoly> {
        let c0 = self.constant_term();
        let unit: BigInt = if c0 == BigInt::one() {
            BigInt::one()
        } else if c0 == -BigInt::one() {
            -BigInt::one()
        } else {
            return None;
        };
        // self = u(1 - N) with N nilpotent: inverse = (1 + N + ... + N^n) u
        let mut nil = self.neg();
        let mut unit_term = BTreeMap::new();
        Self::insert(&mut unit_term, Monomial::unit(), unit.clone());
        let unit_poly = ReducedPoly {
            n: self.n,
            terms: unit_term,
        };
        nil = nil.mul(&unit_poly).ok()?;
        Self::insert(&mut nil.terms, Monomial::unit(), BigInt::one());
        let mut acc = ReducedPoly::one(self.n);
        let mut pow = ReducedPoly::one(self.n);
        for _ in 0..self.n {
            pow = pow.mul(&nil).ok()?;
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow).ok()?;
        }
        acc.mul(&unit_poly).ok()
    }
}

impl fmt::Display for ReducedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}{m}")?;
            }
        }
        Ok(())
    }
}

/// The reduced Magnus expansion: the multiplicative extension of
/// `x_j -> 1 + X_j`, `x_j^-1 -> 1 - X_j`.
pub fn expand(w: &Word) -> ReducedPoly {
    let n = w.n();
    let mut terms = BTreeMap::new();
    terms.insert(Monomial::unit(), BigInt::one());
    for l in w.letters() {
        // multiply by 1 ± X_gen: add (or subtract) the right shift by X_gen
        let mut delta: Vec<(Monomial, BigInt)> = Vec::new();
        for (m, c) in &terms {
            if !m.contains(l.gen) {
                let mut indices = m.indices().to_vec();
                indices.push(l.gen);
                let signed = match l.sign {
                    Sign::Plus => c.clone(),
                    Sign::Minus => -c,
                };
                delta.push((Monomial::unchecked(indices), signed));
            }
        }
        for (m, c) in delta {
            ReducedPoly::insert(&mut terms, m, c);
        }
    }
    ReducedPoly { n, terms }
}

/// Equality in the reduced free group `RF_n`, decided by comparing reduced
/// Magnus expansions. This is the crate's canonical equality test.
pub fn rf_equal(u: &Word, v: &Word) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::ArityMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(expand(u) == expand(v))
}

/// Reconstructs a word whose expansion equals `p`.
///
/// `p` must be group-like, i.e. the expansion of some element of `RF_n`;
/// otherwise `Error::NotGroupLike` is returned. The output is a canonical
/// representative: degree by degree, the discrepancy against `p` is a Lie
/// element, and the left-normed commutators on each variable set realize it
/// exactly (they are dual to the monomials that start with the set's
/// minimum). The result is verified against `p` before it is returned.
pub fn word_from_expansion(p: &ReducedPoly) -> Result<Word> {
    let n = p.n();
    if !p.constant_term().is_one() {
        return Err(Error::NotGroupLike);
    }
    let mut w = Word::empty(n);
    let mut running = ReducedPoly::one(n);
    for degree in 1..=n {
        let gap = running.inverse().ok_or(Error::NotGroupLike)?.mul(p)?;
        for (m, c) in gap.terms() {
            if m.degree() != degree {
                continue;
            }
            let min = *m.indices().iter().min().expect("nonempty monomial");
            if m.indices()[0] != min {
                continue;
            }
            let exp = i64::try_from(c).expect("expansion coefficient exceeds i64");
            let bracket = left_normed_commutator(m.indices(), n)?;
            w = w.product(&bracket.pow(exp))?;
            // E(bracket^exp) = 1 + exp * (E(bracket) - 1), exactly
            let lie = expand(&bracket).sub(&ReducedPoly::one(n))?;
            let mut factor = ReducedPoly::one(n);
            for (lm, lc) in lie.terms() {
                ReducedPoly::insert(&mut factor.terms, lm.clone(), lc * BigInt::from(exp));
            }
            running = running.mul(&factor)?;
        }
    }
    if running != *p {
        return Err(Error::NotGroupLike);
    }
    Ok(w)
}

/// `by^-1 * p * by`; `by` must have constant term `±1`.
pub(crate) fn conjugate_expansion(p: &ReducedPoly, by: &ReducedPoly) -> ReducedPoly {
    let inv = by
        .inverse()
        .expect("conjugator expansion must be invertible");
    inv.mul(p).and_then(|q| q.mul(by)).expect("same arity")
}

/// Applies the ring endomorphism `X_j -> y[j-1]` (each `y_j` must have zero
/// constant term and all its monomials must contain `X_j`, as is the case
/// for `E(x_j^w) - 1`; this is what makes the assignment well defined on the
/// repeat-free quotient).
pub(crate) fn substitute_variables(p: &ReducedPoly, y: &[ReducedPoly]) -> ReducedPoly {
    let n = p.n();
    let mut acc = ReducedPoly::zero(n);
    for (m, c) in p.terms() {
        let mut prod = ReducedPoly::one(n);
        for &i in m.indices() {
            prod = prod.mul(&y[i - 1]).expect("same arity");
            if prod.is_zero() {
                break;
            }
        }
        let mut scaled = BTreeMap::new();
        for (pm, pc) in prod.terms() {
            scaled.insert(pm.clone(), pc * c);
        }
        acc = acc
            .add(&ReducedPoly { n, terms: scaled })
            .expect("same arity");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    fn mono(indices: &[usize], n: usize) -> Monomial {
        Monomial::new(indices.to_vec(), n).unwrap()
    }

    /// Brute-force model of the reduced algebra, independent of
    /// `ReducedPoly`: plain term lists with quadratic multiplication.
    mod naive {
        use alloc::vec::Vec;

        pub type Poly = Vec<(Vec<usize>, i64)>;

        pub fn one() -> Poly {
            alloc::vec![(Vec::new(), 1)]
        }

        fn repeat_free(m: &[usize]) -> bool {
            m.iter().enumerate().all(|(k, i)| !m[..k].contains(i))
        }

        fn push(acc: &mut Poly, m: Vec<usize>, c: i64) {
            if c == 0 || !repeat_free(&m) {
                return;
            }
            if let Some(entry) = acc.iter_mut().find(|(em, _)| *em == m) {
                entry.1 += c;
            } else {
                acc.push((m, c));
            }
        }

        pub fn mul(a: &Poly, b: &Poly) -> Poly {
            let mut acc = Poly::new();
            for (ma, ca) in a {
                for (mb, cb) in b {
                    let mut m = ma.clone();
                    m.extend_from_slice(mb);
                    push(&mut acc, m, ca * cb);
                }
            }
            acc.retain(|(_, c)| *c != 0);
            acc
        }

        pub fn generator(j: usize, sign: i64) -> Poly {
            alloc::vec![(Vec::new(), 1), (alloc::vec![j], sign)]
        }

        pub fn of_word(word: &crate::Word) -> Poly {
            let mut acc = one();
            for l in word.letters() {
                let s = match l.sign {
                    crate::Sign::Plus => 1,
                    crate::Sign::Minus => -1,
                };
                acc = mul(&acc, &generator(l.gen, s));
            }
            acc
        }
    }

    fn assert_matches_naive(word: &Word) {
        let fast = expand(word);
        let slow = naive::of_word(word);
        let mut slow_nonzero: Vec<_> = slow.into_iter().filter(|(_, c)| *c != 0).collect();
        slow_nonzero.sort();
        let mut fast_terms: Vec<(Vec<usize>, i64)> = fast
            .terms()
            .map(|(m, c)| (m.indices().to_vec(), i64::try_from(c).unwrap()))
            .collect();
        fast_terms.sort();
        assert_eq!(fast_terms, slow_nonzero, "expansion of {word}");
    }

    #[test]
    fn expand_product_of_generators() {
        let p = expand(&w("x1 x2", 2));
        assert_eq!(alloc::format!("{p}"), "1 + X1 + X2 + X1X2");
        assert_matches_naive(&w("x1 x2", 2));
    }

    #[test]
    fn expand_inverse_generator_truncates() {
        let p = expand(&w("x1^-1", 2));
        assert_eq!(alloc::format!("{p}"), "1 - X1");
        assert_matches_naive(&w("x1^-1", 2));
    }

    #[test]
    fn expand_commutator_frozen_value() {
        // oracle: (1-X1)(1-X2)(1+X1)(1+X2) multiplied out in the quotient
        let product = [(1, -1), (2, -1), (1, 1), (2, 1)]
            .iter()
            .fold(naive::one(), |acc, &(j, s)| {
                naive::mul(&acc, &naive::generator(j, s))
            });
        let mut oracle: Vec<_> = product.into_iter().collect();
        oracle.sort();
        assert_eq!(
            oracle,
            alloc::vec![
                (alloc::vec![], 1),
                (alloc::vec![1, 2], 1),
                (alloc::vec![2, 1], -1)
            ]
        );

        let p = expand(&w("x1^-1 x2^-1 x1 x2", 2));
        assert_eq!(alloc::format!("{p}"), "1 + X1X2 - X2X1");
    }

    #[test]
    fn poly_add_examples() {
        let one = ReducedPoly::one(2);
        let x1 = expand(&w("x1", 2)).sub(&one).unwrap();
        assert_eq!(one.add(&x1).unwrap().add(&x1.neg()).unwrap(), one);
        assert_eq!(
            ReducedPoly::zero(2).add(&expand(&w("x2", 2))).unwrap(),
            expand(&w("x2", 2))
        );
    }

    #[test]
    fn poly_add_keeps_noncommutative_monomials_apart() {
        let x1x2 = expand(&w("x1 x2", 2));
        let x2x1 = expand(&w("x2 x1", 2));
        let sum = x1x2.add(&x2x1).unwrap();
        assert_eq!(sum.coefficient(&mono(&[1, 2], 2)).unwrap(), BigInt::from(1));
        assert_eq!(sum.coefficient(&mono(&[2, 1], 2)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn poly_mul_repeat_annihilation() {
        let p = expand(&w("x1", 2));
        let q = expand(&w("x1^-1", 2));
        assert_eq!(p.mul(&q).unwrap(), ReducedPoly::one(2));

        let x1x2 = expand(&w("x1 x2", 2))
            .sub(&expand(&w("x1", 2)))
            .unwrap()
            .sub(&expand(&w("x2", 2)))
            .unwrap()
            .add(&ReducedPoly::one(2))
            .unwrap(); // isolates the X1X2 term
        let x2 = expand(&w("x2", 2)).sub(&ReducedPoly::one(2)).unwrap();
        assert!(x1x2.mul(&x2).unwrap().is_zero());
    }

    #[test]
    fn poly_mul_of_generator_images() {
        let p = expand(&w("x1", 2)).mul(&expand(&w("x2", 2))).unwrap();
        assert_eq!(p, expand(&w("x1 x2", 2)));
    }

    #[test]
    fn coefficient_examples() {
        let p = expand(&w("x1 x1", 2));
        assert_eq!(p.coefficient(&mono(&[1], 2)).unwrap(), BigInt::from(2));
        let c = expand(&w("x1^-1 x2^-1 x1 x2", 2));
        assert_eq!(c.coefficient(&mono(&[2, 1], 2)).unwrap(), BigInt::from(-1));
        assert_eq!(
            ReducedPoly::one(2).coefficient(&mono(&[1, 2], 2)).unwrap(),
            BigInt::zero()
        );
        assert!(Monomial::new(alloc::vec![1, 1], 2).is_err());
        assert!(Monomial::new(alloc::vec![3], 2).is_err());
    }

    #[test]
    fn rf_equal_examples() {
        assert!(rf_equal(&w("x1 x1^-1 x2", 2), &w("x2", 2)).unwrap());
        assert!(!rf_equal(&w("x1", 2), &w("x2", 2)).unwrap());

        // relator of RF_n: [x1^{x2}, x1^{x2 x2}]
        let a = w("x1", 2).conjugated_by(&w("x2", 2)).unwrap();
        let b = w("x1", 2).conjugated_by(&w("x2 x2", 2)).unwrap();
        let relator = Word::commutator(&a, &b).unwrap();
        assert!(rf_equal(&relator, &Word::empty(2)).unwrap());
        assert_matches_naive(&relator);
    }

    #[test]
    fn rf_equal_rejects_mismatched_arity() {
        assert!(rf_equal(&w("x1", 2), &w("x1", 3)).is_err());
    }

    #[test]
    fn inverse_of_expansion() {
        let p = expand(&w("x1 x2^-1 x3 x1", 3));
        let inv = p.inverse().unwrap();
        assert_eq!(p.mul(&inv).unwrap(), ReducedPoly::one(3));
        assert_eq!(inv, expand(&w("x1 x2^-1 x3 x1", 3).inverse()));
    }

    #[test]
    fn word_from_expansion_round_trips_small_words() {
        for text in ["e", "x1", "x2^-1 x1 x2", "x1^-1 x2^-1 x1 x2", "x1 x1 x2^-1"] {
            let word = w(text, 3);
            let rebuilt = word_from_expansion(&expand(&word)).unwrap();
            assert!(rf_equal(&rebuilt, &word).unwrap(), "{text}");
        }
    }

    #[test]
    fn word_from_expansion_rejects_non_group_like() {
        assert!(word_from_expansion(&ReducedPoly::zero(2)).is_err());
        // 1 + X1X2 is not a group expansion: the commutator also carries -X2X1
        let mut terms = BTreeMap::new();
        ReducedPoly::insert(&mut terms, Monomial::unit(), BigInt::one());
        ReducedPoly::insert(&mut terms, mono(&[1, 2], 2), BigInt::one());
        let bad = ReducedPoly { n: 2, terms };
        assert!(word_from_expansion(&bad).is_err());
    }

    fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec((1..=n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            Word::reduce(
                ls.into_iter()
                    .map(|(g, s)| Letter::new(g, if s { Sign::Plus } else { Sign::Minus })),
                n,
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn expansion_is_multiplicative(u in word_strategy(5, 30), v in word_strategy(5, 30)) {
            let uv = u.product(&v).unwrap();
            prop_assert_eq!(expand(&uv), expand(&u).mul(&expand(&v)).unwrap());
        }

        #[test]
        fn expansion_of_inverse_is_inverse(u in word_strategy(5, 30)) {
            let prod = expand(&u).mul(&expand(&u.inverse())).unwrap();
            prop_assert_eq!(prod, ReducedPoly::one(5));
        }

        #[test]
        fn relators_expand_to_one(g in word_strategy(4, 12), h in word_strategy(4, 12), i in 1usize..=4) {
            let xi = Word::generator(i, 4).unwrap();
            let a = xi.conjugated_by(&g).unwrap();
            let b = xi.conjugated_by(&h).unwrap();
            let relator = Word::commutator(&a, &b).unwrap();
            prop_assert_eq!(expand(&relator), ReducedPoly::one(4));
        }

        #[test]
        fn support_is_repeat_free_and_bounded(u in word_strategy(4, 30)) {
            let p = expand(&u);
            // sum over k of n!/(n-k)! for n = 4
            let bound = 1 + 4 + 12 + 24 + 24;
            prop_assert!(p.support_size() <= bound);
            for (m, _) in p.terms() {
                let mut seen = alloc::vec![false; 5];
                for &i in m.indices() {
                    prop_assert!(!seen[i]);
                    seen[i] = true;
                }
            }
        }

        #[test]
        fn constant_term_is_always_one(u in word_strategy(4, 30)) {
            prop_assert!(expand(&u).constant_term().is_one());
        }

        #[test]
        fn expansion_matches_naive_model(u in word_strategy(4, 16)) {
            assert_matches_naive(&u);
        }

        #[test]
        fn reconstruction_round_trips(u in word_strategy(4, 16)) {
            let rebuilt = word_from_expansion(&expand(&u)).unwrap();
            prop_assert!(rf_equal(&rebuilt, &u).unwrap());
        }
    }
}
