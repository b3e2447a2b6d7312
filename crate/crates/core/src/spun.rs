//! The Z/2 double-point obstruction for surface-link diagrams.
//!
//! Input is an abstract ledger: one surface per component with the rank of
//! its first Z/2-homology, and one record per circle of double points,
//! carrying the over component, the under component and the class of the
//! circle in the under component's homology. The invariant `Γ_{i,j}` is the
//! XOR-sum of the classes of all circles where `i` passes over `j`.
//!
//! For the braid closure of a string link every such circle is parallel to
//! the top boundary of the under component, so for fixed `j` the nonzero
//! values among `Γ_{i,j}` all coincide. Finding two distinct nonzero values
//! under one component therefore certifies that the surface link is not a
//! braid closure, even up to link-homotopy.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// An element of `H_1` with Z/2 coefficients, as bits over the declared
/// basis (index `k` is the coefficient of the `k`th basis element).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Z2Class {
    bits: Vec<bool>,
}

impl Z2Class {
    pub fn zero(rank: usize) -> Z2Class {
        Z2Class {
            bits: alloc::vec![false; rank],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Z2Class {
        Z2Class { bits }
    }

    pub fn rank(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn xor_assign(&mut self, other: &Z2Class) {
        for (b, o) in self.bits.iter_mut().zip(&other.bits) {
            *b ^= o;
        }
    }
}

impl fmt::Display for Z2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// One component surface: its id and the rank of `H_1(·; Z/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSurface {
    pub id: usize,
    pub h1_rank: usize,
}

/// One circle of double points between two distinct components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCircle {
    /// Component passing over along this circle.
    pub over: usize,
    /// Component passing under; the class lives in its homology.
    pub under: usize,
    pub class: Z2Class,
}

/// The double-point ledger of a surface-link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpunSurfaceData {
    components: Vec<ComponentSurface>,
    circles: Vec<DoubleCircle>,
}

/// A certificate that the data cannot come from a braid closure: two
/// components passing over `under` with distinct nonzero classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub under: usize,
    pub first_over: usize,
    pub second_over: usize,
}

impl SpunSurfaceData {
    pub fn new(
        components: Vec<ComponentSurface>,
        circles: Vec<DoubleCircle>,
    ) -> Result<SpunSurfaceData> {
        for (k, c) in components.iter().enumerate() {
            if components[..k].iter().any(|p| p.id == c.id) {
                return Err(Error::DuplicateComponent { id: c.id });
            }
        }
        let rank_of = |id: usize| {
            components
                .iter()
                .find(|c| c.id == id)
                .map(|c| c.h1_rank)
                .ok_or(Error::UnknownComponent { id })
        };
        for circle in &circles {
            if circle.over == circle.under {
                return Err(Error::SameComponent { id: circle.over });
            }
            rank_of(circle.over)?;
            let expected = rank_of(circle.under)?;
            if circle.class.rank() != expected {
                return Err(Error::ClassLength {
                    expected,
                    got: circle.class.rank(),
                });
            }
        }
        Ok(SpunSurfaceData {
            components,
            circles,
        })
    }

    pub fn components(&self) -> &[ComponentSurface] {
        &self.components
    }

    pub fn circles(&self) -> &[DoubleCircle] {
        &self.circles
    }

    /// Component ids in ascending order.
    pub fn ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.components.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids
    }

    fn rank_of(&self, id: usize) -> Result<usize> {
        self.components
            .iter()
            .find(|c| c.id == id)
            .map(|c| c.h1_rank)
            .ok_or(Error::UnknownComponent { id })
    }

    /// `Γ_{i,j}`: the XOR-sum of the classes of all circles where `i`
    /// passes over `j`.
    pub fn gamma(&self, over: usize, under: usize) -> Result<Z2Class> {
        if over == under {
            return Err(Error::SameComponent { id: over });
        }
        self.rank_of(over)?;
        let mut acc = Z2Class::zero(self.rank_of(under)?);
        for circle in &self.circles {
            if circle.over == over && circle.under == under {
                acc.xor_assign(&circle.class);
            }
        }
        Ok(acc)
    }

    /// Scans every under component for two distinct nonzero `Γ` values.
    /// Components are scanned in ascending id order, so the witness is
    /// deterministic.
    pub fn braid_closure_obstruction(&self) -> Option<ObstructionWitness> {
        let ids = self.ids();
        for &under in &ids {
            let mut first: Option<(usize, Z2Class)> = None;
            for &over in &ids {
                if over == under {
                    continue;
                }
                let g = self.gamma(over, under).expect("ids are declared");
                if g.is_zero() {
                    continue;
                }
                match &first {
                    None => first = Some((over, g)),
                    Some((prev, class)) if *class != g => {
                        return Some(ObstructionWitness {
                            under,
                            first_over: *prev,
                            second_over: over,
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        None
    }
}
