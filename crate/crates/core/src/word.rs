//! Freely reduced words in the free group `F_n`.
//!
//! A [`Word`] carries its ambient generator count `n` and is kept freely
//! reduced by every constructor: no `x_i x_i^-1` or `x_i^-1 x_i` pair ever
//! survives. Binary operations check that both operands share the same `n`.
//!
//! Text form: whitespace-separated tokens `x<k>` or `x<k>^-1`; the empty
//! word is written `e`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Sign of a letter exponent or of a diagram crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One letter `x_gen^{±1}`. Generator indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: usize, sign: Sign) -> Letter {
        Letter { gen, sign }
    }

    /// `x_gen`
    pub fn pos(gen: usize) -> Letter {
        Letter {
            gen,
            sign: Sign::Plus,
        }
    }

    /// `x_gen^-1`
    pub fn neg(gen: usize) -> Letter {
        Letter {
            gen,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "x{}", self.gen),
            Sign::Minus => write!(f, "x{}^-1", self.gen),
        }
    }
}

/// A freely reduced word in `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<Letter>,
}

fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    match buf.last() {
        Some(&top) if top.cancels(letter) => {
            buf.pop();
        }
        _ => buf.push(letter),
    }
}

impl Word {
    /// The empty word in `F_n`.
    pub fn empty(n: usize) -> Word {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `x_gen`.
    pub fn generator(gen: usize, n: usize) -> Result<Word> {
        if gen == 0 || gen > n {
            return Err(Error::GeneratorOutOfRange { gen, n });
        }
        Ok(Word {
            n,
            letters: alloc::vec![Letter::pos(gen)],
        })
    }

    /// Freely reduces a letter sequence. Idempotent.
    pub fn reduce<I>(letters: I, n: usize) -> Result<Word>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut buf = Vec::new();
        for l in letters {
            if l.gen == 0 || l.gen > n {
                return Err(Error::GeneratorOutOfRange { gen: l.gen, n });
            }
            push_reduced(&mut buf, l);
        }
        Ok(Word { n, letters: buf })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_arity(&self, other: &Word) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Freely reduced concatenation `self · rhs`.
    pub fn product(&self, rhs: &Word) -> Result<Word> {
        self.check_arity(rhs)?;
        let mut buf = self.letters.clone();
        for &l in &rhs.letters {
            push_reduced(&mut buf, l);
        }
        Ok(Word {
            n: self.n,
            letters: buf,
        })
    }

    /// The group inverse; `w.product(&w.inverse())` is the empty word.
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word { n: self.n, letters }
    }

    /// The conjugate `by^-1 · self · by`.
    pub fn conjugated_by(&self, by: &Word) -> Result<Word> {
        self.check_arity(by)?;
        let mut buf = by.inverse().letters;
        for &l in &self.letters {
            push_reduced(&mut buf, l);
        }
        for &l in &by.letters {
            push_reduced(&mut buf, l);
        }
        Ok(Word {
            n: self.n,
            letters: buf,
        })
    }

    /// The commutator `a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word> {
        let mut w = a.inverse().product(&b.inverse())?;
        w = w.product(a)?;
        w.product(b)
    }

    /// `self^exp` for any integer exponent.
    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut buf = Vec::new();
        for _ in 0..exp.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut buf, l);
            }
        }
        Word {
            n: self.n,
            letters: buf,
        }
    }

    /// Image under the quotient homomorphism `x_gen -> 1`: deletes every
    /// letter on `gen` and reduces. Panics if `gen` is out of range.
    pub fn kill_generator(&self, gen: usize) -> Word {
        assert!(
            gen >= 1 && gen <= self.n,
            "generator index {gen} out of range 1..={}",
            self.n
        );
        let mut buf = Vec::new();
        for &l in &self.letters {
            if l.gen != gen {
                push_reduced(&mut buf, l);
            }
        }
        Word {
            n: self.n,
            letters: buf,
        }
    }

    /// Applies the homomorphism sending `x_j` to `images[j-1]`. All images
    /// must share one ambient count, which becomes the result's.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.n {
            return Err(Error::ImageCount {
                expected: self.n,
                got: images.len(),
            });
        }
        let m = images.first().map_or(0, |w| w.n);
        for w in images {
            if w.n != m {
                return Err(Error::ArityMismatch {
                    left: m,
                    right: w.n,
                });
            }
        }
        let mut buf = Vec::new();
        for &l in &self.letters {
            let image = &images[l.gen - 1];
            match l.sign {
                Sign::Plus => {
                    for &il in &image.letters {
                        push_reduced(&mut buf, il);
                    }
                }
                Sign::Minus => {
                    for &il in image.letters.iter().rev() {
                        push_reduced(&mut buf, il.inverse());
                    }
                }
            }
        }
        Ok(Word { n: m, letters: buf })
    }

    /// Parses the text form: `e`, or whitespace-separated `x<k>` / `x<k>^-1`.
    pub fn parse(text: &str, n: usize) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed == "e" {
            return Ok(Word::empty(n));
        }
        let mut letters = Vec::new();
        for tok in trimmed.split_whitespace() {
            let (body, sign) = match tok.strip_suffix("^-1") {
                Some(body) => (body, Sign::Minus),
                None => (tok, Sign::Plus),
            };
            let gen = body
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&g| g >= 1)
                .ok_or_else(|| Error::WordSyntax(tok.to_string()))?;
            letters.push(Letter::new(gen, sign));
        }
        Word::reduce(letters, n)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The left-normed commutator `[[x_{i1}, x_{i2}], ..., x_{id}]` (with
/// `[a, b] = a^-1 b^-1 a b`), or `x_{i1}` for a single index.
pub fn left_normed_commutator(indices: &[usize], n: usize) -> Result<Word> {
    let mut it = indices.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::MalformedMonomial("empty index list".into()))?;
    let mut w = Word::generator(*first, n)?;
    for &i in it {
        w = Word::commutator(&w, &Word::generator(i, n)?)?;
    }
    Ok(w)
}
