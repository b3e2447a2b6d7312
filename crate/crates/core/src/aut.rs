//! Conjugating automorphisms of the reduced free group `RF_n`.
//!
//! A [`ConjAut`] is stored as its tuple of conjugators: the `i`th generator
//! is sent to `λ_i^-1 x_i λ_i`. Conjugators are arbitrary representatives of
//! their `RF_n` class; canonical data is only extracted at comparison time,
//! by killing `x_i` inside `λ_i` and expanding. Two automorphisms are equal
//! exactly when all these normalized expansions agree, which is the same as
//! agreement of all Milnor numbers with non-repeating indices.

use alloc::vec::Vec;
use core::fmt;

use crate::magnus::{
    conjugate_expansion, expand, substitute_variables, word_from_expansion, ReducedPoly,
};
use crate::word::Word;
use crate::{Error, Result};

/// Conjugator length up to which composition concatenates words directly.
/// Longer inputs are recombined through their expansions, which keeps the
/// stored representatives short under repeated composition.
const LITERAL_COMPOSE_MAX: usize = 32;

/// An automorphism of `RF_n` mapping each generator to a conjugate of
/// itself, stored as the conjugator tuple `λ_1, ..., λ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjAut {
    n: usize,
    conjugators: Vec<Word>,
}

impl ConjAut {
    /// Wraps a conjugator tuple; every word must live in `F_n` with
    /// `n = conjugators.len()`.
    pub fn new(n: usize, conjugators: Vec<Word>) -> Result<ConjAut> {
        if conjugators.len() != n {
            return Err(Error::ImageCount {
                expected: n,
                got: conjugators.len(),
            });
        }
        for w in &conjugators {
            if w.n() != n {
                return Err(Error::ArityMismatch {
                    left: n,
                    right: w.n(),
                });
            }
        }
        Ok(ConjAut { n, conjugators })
    }

    /// The identity automorphism (all conjugators empty).
    pub fn identity(n: usize) -> ConjAut {
        ConjAut {
            n,
            conjugators: (0..n).map(|_| Word::empty(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn conjugators(&self) -> &[Word] {
        &self.conjugators
    }

    /// The conjugator `λ_i` (1-based).
    pub fn conjugator(&self, i: usize) -> &Word {
        &self.conjugators[i - 1]
    }

    fn is_identity_tuple(&self) -> bool {
        self.conjugators.iter().all(Word::is_empty)
    }

    fn check_arity(&self, other: &ConjAut) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// The image of `w`: every letter `x_i^±` is replaced by
    /// `(λ_i^-1 x_i λ_i)^±` and the result is reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.n() != self.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        let images = self.generator_images()?;
        w.substitute(&images)
    }

    fn generator_images(&self) -> Result<Vec<Word>> {
        (1..=self.n)
            .map(|i| Word::generator(i, self.n)?.conjugated_by(&self.conjugators[i - 1]))
            .collect()
    }

    /// Composition matching the stacking of string links: `self` is the
    /// automorphism of the bottom piece, `top` of the piece stacked above.
    /// The result acts as `self ∘ top`, with conjugators
    /// `λ_i(self) · self(λ_i(top))`.
    pub fn compose_stack(&self, top: &ConjAut) -> Result<ConjAut> {
        self.check_arity(top)?;
        if self.is_identity_tuple() {
            return Ok(top.clone());
        }
        if top.is_identity_tuple() {
            return Ok(self.clone());
        }
        let longest = self
            .conjugators
            .iter()
            .chain(top.conjugators.iter())
            .map(Word::len)
            .max()
            .unwrap_or(0);
        if longest <= LITERAL_COMPOSE_MAX {
            let conjugators = (0..self.n)
                .map(|k| self.conjugators[k].product(&self.apply(&top.conjugators[k])?))
                .collect::<Result<Vec<_>>>()?;
            return ConjAut::new(self.n, conjugators);
        }
        // Long conjugators: combine the expansions instead and reconstruct
        // short representatives of the same RF_n classes.
        let e_bottom: Vec<ReducedPoly> = self.conjugators.iter().map(expand).collect();
        let y = variable_images(&e_bottom, self.n);
        let conjugators = (0..self.n)
            .map(|k| {
                let e_top = expand(&top.conjugators[k]);
                let composed = e_bottom[k].mul(&substitute_variables(&e_top, &y))?;
                word_from_expansion(&composed)
            })
            .collect::<Result<Vec<_>>>()?;
        ConjAut::new(self.n, conjugators)
    }

    /// The group inverse, computed by the fixed-point iteration
    /// `μ_i <- (ψ(λ_i))^-1` starting from the identity tuple; nilpotency of
    /// `RF_n` makes the iteration stationary within `n` rounds. The result
    /// is verified to be a two-sided inverse; failure to converge or to
    /// verify is a bug, and panics.
    pub fn invert(&self) -> ConjAut {
        let n = self.n;
        let e_lambda: Vec<ReducedPoly> = self.conjugators.iter().map(expand).collect();
        let mut q: Vec<ReducedPoly> = (0..n).map(|_| ReducedPoly::one(n)).collect();
        let mut stable = false;
        for _ in 0..=(n + 1) {
            let y = variable_images(&q, n);
            let next: Vec<ReducedPoly> = e_lambda
                .iter()
                .map(|e| {
                    substitute_variables(e, &y)
                        .inverse()
                        .expect("expansion has unit constant term")
                })
                .collect();
            if next == q {
                stable = true;
                break;
            }
            q = next;
        }
        assert!(
            stable,
            "conjugating automorphism inversion did not converge"
        );
        let conjugators: Vec<Word> = q
            .iter()
            .map(|e| word_from_expansion(e).expect("iterates of group expansions are group-like"))
            .collect();
        let inv = ConjAut::new(n, conjugators).expect("tuple built with matching arity");
        let id = ConjAut::identity(n);
        let left = self.compose_stack(&inv).and_then(|c| c.aut_equal(&id));
        let right = inv.compose_stack(self).and_then(|c| c.aut_equal(&id));
        assert!(
            left.unwrap_or(false) && right.unwrap_or(false),
            "computed inverse failed verification"
        );
        inv
    }

    /// Equality as automorphisms: all normalized conjugator expansions
    /// agree. Equivalent to equality of all non-repeating Milnor numbers.
    pub fn aut_equal(&self, other: &ConjAut) -> Result<bool> {
        self.check_arity(other)?;
        for i in 1..=self.n {
            if expand(&self.normal_conjugator(i)) != expand(&other.normal_conjugator(i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The normalized conjugator `λ̃_i = λ_i` with every `x_i` letter
    /// removed. Longitudes differ by powers of the `i`th meridian, and this
    /// normal form is what makes them comparable.
    pub fn normal_conjugator(&self, i: usize) -> Word {
        self.conjugators[i - 1].kill_generator(i)
    }
}

/// `y[j] = E(x_{j+1}^{w_j}) - 1` for conjugator expansions `e`: the variable
/// images of the ring endomorphism induced by the automorphism.
fn variable_images(e: &[ReducedPoly], n: usize) -> Vec<ReducedPoly> {
    (1..=n)
        .map(|j| {
            let xj = expand(&Word::generator(j, n).expect("j in range"));
            conjugate_expansion(&xj, &e[j - 1])
                .sub(&ReducedPoly::one(n))
                .expect("same arity")
        })
        .collect()
}

impl fmt::Display for ConjAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            writeln!(f, "lambda {i}: {}", self.conjugators[i - 1])?;
            writeln!(f, "lambda~ {i}: {}", expand(&self.normal_conjugator(i)))?;
        }
        Ok(())
    }
}
