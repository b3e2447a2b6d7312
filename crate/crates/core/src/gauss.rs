//! Gauss diagrams of welded string links, with stacking and the move
//! rewrites used for invariance testing.
//!
//! A diagram has `n` strands, oriented bottom to top, and a finite set of
//! signed arrows. An arrow's tail sits on the strand passing over, its head
//! on the strand passing under. Virtual crossings are never represented:
//! the Gauss diagram *is* the welded object modulo virtual moves.
//!
//! Diagrams are kept canonical: endpoint positions are renumbered `1..k`
//! on each strand and arrows are sorted by their tail slot, so equal
//! diagrams compare equal structurally.
//!
//! Implemented rewrites:
//!
//! * `sv`: delete a self-arrow (self-virtualization),
//! * `r1+`/`r1-`: insert/delete a kink: a self-arrow with adjacent
//!   endpoints,
//! * `r2+`/`r2-`: insert/delete a pair of arrows with adjacent tails,
//!   adjacent heads and opposite signs (parallel or crossed pairing),
//! * `r3`: slide three arrows forming the braid-like triangle: arrows
//!   `a`, `b`, `c` with the tails of `a` and `b` adjacent, the head of `a`
//!   adjacent to the tail of `c`, the heads of `b` and `c` adjacent, and
//!   `sign(a) = sign(b)` (the third sign is free); the move swaps each of
//!   the three adjacent pairs,
//! * `oc`: swap two adjacent tails (overcrossings commute).

use alloc::vec::Vec;
use core::fmt;

use crate::word::Sign;
use crate::{Error, Result};

/// A slot on a strand: 1-based strand index and 1-based position, counted
/// from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub strand: usize,
    pub pos: usize,
}

impl Endpoint {
    pub fn new(strand: usize, pos: usize) -> Endpoint {
        Endpoint { strand, pos }
    }

    fn adjacent(self, other: Endpoint) -> bool {
        self.strand == other.strand && self.pos.abs_diff(other.pos) == 1
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.strand, self.pos)
    }
}

/// A signed arrow: tail on the over strand, head on the under strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: Endpoint,
    pub head: Endpoint,
    pub sign: Sign,
}

impl Arrow {
    pub fn new(tail: Endpoint, head: Endpoint, sign: Sign) -> Arrow {
        Arrow { tail, head, sign }
    }

    pub fn is_self_arrow(&self) -> bool {
        self.tail.strand == self.head.strand
    }
}

/// A Gauss diagram on `n` strands, canonical after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    n: usize,
    arrows: Vec<Arrow>,
}

/// Which rewrite family to enumerate or apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Sv,
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    Oc,
}

/// A replayable description of one rewrite. Arrow indices refer to the
/// canonical arrow order of the diagram the move is applied to; insertion
/// positions name the slot the new endpoint will occupy (existing endpoints
/// at or above it shift up).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// Delete the self-arrow `arrow`.
    SvDelete { arrow: usize },
    /// Insert a kink on `strand` at position `at`. `tail_first` puts the
    /// tail below the head.
    R1Insert {
        strand: usize,
        at: usize,
        sign: Sign,
        tail_first: bool,
    },
    /// Delete the kink `arrow` (a self-arrow with adjacent endpoints).
    R1Delete { arrow: usize },
    /// Insert a cancelling arrow pair: tails at `tail_at, tail_at+1` on
    /// `tail_strand`, heads at `head_at, head_at+1` on `head_strand`. The
    /// lower tail carries `sign`; `crossed` pairs the lower tail with the
    /// upper head.
    R2Insert {
        tail_strand: usize,
        tail_at: usize,
        head_strand: usize,
        head_at: usize,
        sign: Sign,
        crossed: bool,
    },
    /// Delete a cancelling pair.
    R2Delete { first: usize, second: usize },
    /// Slide the triangle formed by three arrows past itself.
    R3 {
        first: usize,
        second: usize,
        third: usize,
    },
    /// Swap the adjacent tails at positions `lower_pos, lower_pos+1`.
    OcSwap { strand: usize, lower_pos: usize },
}

impl GaussDiagram {
    /// The trivial diagram: `n` strands, no arrows.
    pub fn trivial(n: usize) -> GaussDiagram {
        GaussDiagram {
            n,
            arrows: Vec::new(),
        }
    }

    /// Validates arrow data and brings it to canonical form: strand indices
    /// in range, one endpoint per slot, positions renumbered `1..k` per
    /// strand, arrows sorted by tail slot.
    pub fn new(n: usize, arrows: Vec<Arrow>) -> Result<GaussDiagram> {
        for a in &arrows {
            for ep in [a.tail, a.head] {
                if ep.strand == 0 || ep.strand > n {
                    return Err(Error::StrandOutOfRange {
                        strand: ep.strand,
                        n,
                    });
                }
            }
        }
        // collect endpoints per strand: (old position, arrow index, is_tail)
        let mut per_strand: Vec<Vec<(usize, usize, bool)>> = alloc::vec![Vec::new(); n];
        for (idx, a) in arrows.iter().enumerate() {
            per_strand[a.tail.strand - 1].push((a.tail.pos, idx, true));
            per_strand[a.head.strand - 1].push((a.head.pos, idx, false));
        }
        let mut canonical = arrows;
        for (s, slots) in per_strand.iter_mut().enumerate() {
            slots.sort();
            for (rank, &(pos, idx, is_tail)) in slots.iter().enumerate() {
                if rank > 0 && slots[rank - 1].0 == pos {
                    return Err(Error::DuplicatePosition { strand: s + 1, pos });
                }
                let ep = Endpoint::new(s + 1, rank + 1);
                if is_tail {
                    canonical[idx].tail = ep;
                } else {
                    canonical[idx].head = ep;
                }
            }
        }
        canonical.sort_by_key(|a| a.tail);
        Ok(GaussDiagram {
            n,
            arrows: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, index: usize) -> Result<&Arrow> {
        self.arrows.get(index).ok_or(Error::NoSuchArrow { index })
    }

    /// Number of endpoint slots on a strand.
    pub fn slots_on(&self, strand: usize) -> usize {
        self.arrows
            .iter()
            .flat_map(|a| [a.tail, a.head])
            .filter(|ep| ep.strand == strand)
            .count()
    }

    /// Heads on a strand, bottom to top, as `(position, arrow index)`.
    pub fn heads_on(&self, strand: usize) -> Vec<(usize, usize)> {
        let mut heads: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.head.strand == strand)
            .map(|(i, a)| (a.head.pos, i))
            .collect();
        heads.sort();
        heads
    }

    /// Index of the arc of `strand` containing a tail at `pos` (arcs are
    /// cut at arrow heads only): the number of heads strictly below.
    pub fn arc_index(&self, strand: usize, pos: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.head.strand == strand && a.head.pos < pos)
            .count()
    }

    /// Arrows whose tail and head lie on the same strand.
    pub fn self_arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(|a| a.is_self_arrow())
    }

    /// Stacks `upper` on top of `self`.
    pub fn stack(&self, upper: &GaussDiagram) -> Result<GaussDiagram> {
        if self.n != upper.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: upper.n,
            });
        }
        let mut arrows = self.arrows.clone();
        let base: Vec<usize> = (1..=self.n).map(|s| self.slots_on(s)).collect();
        for a in &upper.arrows {
            let mut shifted = *a;
            shifted.tail.pos += base[shifted.tail.strand - 1];
            shifted.head.pos += base[shifted.head.strand - 1];
            arrows.push(shifted);
        }
        GaussDiagram::new(self.n, arrows)
    }

    fn endpoint_holder(&self, ep: Endpoint) -> Option<(usize, bool)> {
        for (i, a) in self.arrows.iter().enumerate() {
            if a.tail == ep {
                return Some((i, true));
            }
            if a.head == ep {
                return Some((i, false));
            }
        }
        None
    }

    /// Applies one rewrite; fails if the named pattern does not hold.
    pub fn apply_move(&self, spec: &MoveSpec) -> Result<GaussDiagram> {
        match *spec {
            MoveSpec::SvDelete { arrow } => {
                let a = self.arrow(arrow)?;
                if !a.is_self_arrow() {
                    return Err(Error::MoveNotApplicable(alloc::format!(
                        "arrow {arrow} is not a self-arrow"
                    )));
                }
                self.without_arrows(&[arrow])
            }
            MoveSpec::R1Delete { arrow } => {
                let a = self.arrow(arrow)?;
                if !a.is_self_arrow() || !a.tail.adjacent(a.head) {
                    return Err(Error::MoveNotApplicable(alloc::format!(
                        "arrow {arrow} is not a kink"
                    )));
                }
                self.without_arrows(&[arrow])
            }
            MoveSpec::R1Insert {
                strand,
                at,
                sign,
                tail_first,
            } => {
                self.check_gap(strand, at)?;
                let mut arrows = self.arrows.clone();
                shift_up(&mut arrows, strand, at, 2);
                let (lo, hi) = (Endpoint::new(strand, at), Endpoint::new(strand, at + 1));
                let arrow = if tail_first {
                    Arrow::new(lo, hi, sign)
                } else {
                    Arrow::new(hi, lo, sign)
                };
                arrows.push(arrow);
                GaussDiagram::new(self.n, arrows)
            }
            MoveSpec::R2Delete { first, second } => {
                let a = *self.arrow(first)?;
                let b = *self.arrow(second)?;
                if first == second
                    || a.sign == b.sign
                    || !a.tail.adjacent(b.tail)
                    || !a.head.adjacent(b.head)
                {
                    return Err(Error::MoveNotApplicable(
                        "arrows do not form a cancelling pair".into(),
                    ));
                }
                self.without_arrows(&[first, second])
            }
            MoveSpec::R2Insert {
                tail_strand,
                tail_at,
                head_strand,
                head_at,
                sign,
                crossed,
            } => {
                self.check_gap(tail_strand, tail_at)?;
                self.check_gap(head_strand, head_at)?;
                let mut arrows = self.arrows.clone();
                let (tail_lo, head_lo);
                if tail_strand == head_strand {
                    // both pairs on one strand; tails go below heads when
                    // the insertion gaps coincide
                    if tail_at <= head_at {
                        shift_up(&mut arrows, head_strand, head_at, 2);
                        shift_up(&mut arrows, tail_strand, tail_at, 2);
                        tail_lo = tail_at;
                        head_lo = head_at + 2;
                    } else {
                        shift_up(&mut arrows, tail_strand, tail_at, 2);
                        shift_up(&mut arrows, head_strand, head_at, 2);
                        tail_lo = tail_at + 2;
                        head_lo = head_at;
                    }
                } else {
                    shift_up(&mut arrows, tail_strand, tail_at, 2);
                    shift_up(&mut arrows, head_strand, head_at, 2);
                    tail_lo = tail_at;
                    head_lo = head_at;
                }
                let t = |pos| Endpoint::new(tail_strand, pos);
                let h = |pos| Endpoint::new(head_strand, pos);
                let (h_for_lo, h_for_hi) = if crossed {
                    (h(head_lo + 1), h(head_lo))
                } else {
                    (h(head_lo), h(head_lo + 1))
                };
                arrows.push(Arrow::new(t(tail_lo), h_for_lo, sign));
                arrows.push(Arrow::new(t(tail_lo + 1), h_for_hi, sign.flip()));
                GaussDiagram::new(self.n, arrows)
            }
            MoveSpec::R3 {
                first,
                second,
                third,
            } => {
                self.arrow(first)?;
                self.arrow(second)?;
                self.arrow(third)?;
                let roles = r3_roles(self, [first, second, third]).ok_or_else(|| {
                    Error::MoveNotApplicable("arrows do not form an R3 triangle".into())
                })?;
                let (r12, r13, r23) = roles;
                let mut arrows = self.arrows.clone();
                let pairs = [
                    (arrows[r12].tail, arrows[r13].tail),
                    (arrows[r12].head, arrows[r23].tail),
                    (arrows[r13].head, arrows[r23].head),
                ];
                arrows[r12].tail = pairs[0].1;
                arrows[r13].tail = pairs[0].0;
                arrows[r12].head = pairs[1].1;
                arrows[r23].tail = pairs[1].0;
                arrows[r13].head = pairs[2].1;
                arrows[r23].head = pairs[2].0;
                GaussDiagram::new(self.n, arrows)
            }
            MoveSpec::OcSwap { strand, lower_pos } => {
                let lo = Endpoint::new(strand, lower_pos);
                let hi = Endpoint::new(strand, lower_pos + 1);
                let (i, i_tail) = self.endpoint_holder(lo).ok_or_else(|| {
                    Error::MoveNotApplicable(alloc::format!("no endpoint at {lo}"))
                })?;
                let (j, j_tail) = self.endpoint_holder(hi).ok_or_else(|| {
                    Error::MoveNotApplicable(alloc::format!("no endpoint at {hi}"))
                })?;
                if !i_tail || !j_tail {
                    return Err(Error::MoveNotApplicable(
                        "both endpoints must be tails".into(),
                    ));
                }
                let mut arrows = self.arrows.clone();
                arrows[i].tail = hi;
                arrows[j].tail = lo;
                GaussDiagram::new(self.n, arrows)
            }
        }
    }

    /// All applicable rewrites of one kind, in a deterministic order.
    pub fn enumerate_moves(&self, kind: MoveKind) -> Vec<MoveSpec> {
        let mut out = Vec::new();
        match kind {
            MoveKind::Sv => {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.is_self_arrow() {
                        out.push(MoveSpec::SvDelete { arrow: i });
                    }
                }
            }
            MoveKind::R1Delete => {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.is_self_arrow() && a.tail.adjacent(a.head) {
                        out.push(MoveSpec::R1Delete { arrow: i });
                    }
                }
            }
            MoveKind::R1Insert => {
                for strand in 1..=self.n {
                    for at in 1..=self.slots_on(strand) + 1 {
                        for sign in [Sign::Plus, Sign::Minus] {
                            for tail_first in [true, false] {
                                out.push(MoveSpec::R1Insert {
                                    strand,
                                    at,
                                    sign,
                                    tail_first,
                                });
                            }
                        }
                    }
                }
            }
            MoveKind::R2Delete => {
                for i in 0..self.arrows.len() {
                    for j in i + 1..self.arrows.len() {
                        let (a, b) = (&self.arrows[i], &self.arrows[j]);
                        if a.sign != b.sign && a.tail.adjacent(b.tail) && a.head.adjacent(b.head) {
                            out.push(MoveSpec::R2Delete {
                                first: i,
                                second: j,
                            });
                        }
                    }
                }
            }
            MoveKind::R2Insert => {
                for tail_strand in 1..=self.n {
                    for tail_at in 1..=self.slots_on(tail_strand) + 1 {
                        for head_strand in 1..=self.n {
                            for head_at in 1..=self.slots_on(head_strand) + 1 {
                                for sign in [Sign::Plus, Sign::Minus] {
                                    for crossed in [false, true] {
                                        out.push(MoveSpec::R2Insert {
                                            tail_strand,
                                            tail_at,
                                            head_strand,
                                            head_at,
                                            sign,
                                            crossed,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            MoveKind::R3 => {
                let m = self.arrows.len();
                for i in 0..m {
                    for j in i + 1..m {
                        for k in j + 1..m {
                            if r3_roles(self, [i, j, k]).is_some() {
                                out.push(MoveSpec::R3 {
                                    first: i,
                                    second: j,
                                    third: k,
                                });
                            }
                        }
                    }
                }
            }
            MoveKind::Oc => {
                for strand in 1..=self.n {
                    let mut tails: Vec<usize> = self
                        .arrows
                        .iter()
                        .filter(|a| a.tail.strand == strand)
                        .map(|a| a.tail.pos)
                        .collect();
                    tails.sort();
                    for w in tails.windows(2) {
                        if w[1] == w[0] + 1 {
                            out.push(MoveSpec::OcSwap {
                                strand,
                                lower_pos: w[0],
                            });
                        }
                    }
                }
            }
        }
        out
    }

    fn without_arrows(&self, remove: &[usize]) -> Result<GaussDiagram> {
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, a)| *a)
            .collect();
        GaussDiagram::new(self.n, arrows)
    }

    fn check_gap(&self, strand: usize, at: usize) -> Result<()> {
        if strand == 0 || strand > self.n {
            return Err(Error::StrandOutOfRange { strand, n: self.n });
        }
        let max = self.slots_on(strand) + 1;
        if at == 0 || at > max {
            return Err(Error::MoveNotApplicable(alloc::format!(
                "insertion position {at} out of range 1..={max} on strand {strand}"
            )));
        }
        Ok(())
    }
}

fn shift_up(arrows: &mut [Arrow], strand: usize, at: usize, width: usize) {
    for a in arrows {
        if a.tail.strand == strand && a.tail.pos >= at {
            a.tail.pos += width;
        }
        if a.head.strand == strand && a.head.pos >= at {
            a.head.pos += width;
        }
    }
}

/// Tries to label the three arrows as `(r12, r13, r23)` of the triangle
/// pattern: tails of `r12, r13` adjacent, head of `r12` adjacent to tail of
/// `r23`, heads of `r13, r23` adjacent, `sign(r12) = sign(r13)`, and the
/// three pairs consistently ordered (all lower-first or all upper-first).
fn r3_roles(d: &GaussDiagram, ids: [usize; 3]) -> Option<(usize, usize, usize)> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in PERMS {
        let (i12, i13, i23) = (ids[perm[0]], ids[perm[1]], ids[perm[2]]);
        let (r12, r13, r23) = (&d.arrows[i12], &d.arrows[i13], &d.arrows[i23]);
        if r12.sign != r13.sign
            || !r12.tail.adjacent(r13.tail)
            || !r12.head.adjacent(r23.tail)
            || !r13.head.adjacent(r23.head)
        {
            continue;
        }
        let before = r12.tail.pos < r13.tail.pos
            && r12.head.pos < r23.tail.pos
            && r13.head.pos < r23.head.pos;
        let after = r12.tail.pos > r13.tail.pos
            && r12.head.pos > r23.tail.pos
            && r13.head.pos > r23.head.pos;
        if before || after {
            return Some((i12, i13, i23));
        }
    }
    None
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gauss v1")?;
        writeln!(f, "strands {}", self.n)?;
        for a in &self.arrows {
            writeln!(f, "arrow t={} h={} s={}", a.tail, a.head, a.sign)?;
        }
        Ok(())
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MoveKind::Sv => "sv",
            MoveKind::R1Insert => "r1+",
            MoveKind::R1Delete => "r1-",
            MoveKind::R2Insert => "r2+",
            MoveKind::R2Delete => "r2-",
            MoveKind::R3 => "r3",
            MoveKind::Oc => "oc",
        };
        write!(f, "{name}")
    }
}

impl MoveKind {
    pub fn parse(text: &str) -> Option<MoveKind> {
        Some(match text {
            "sv" => MoveKind::Sv,
            "r1+" => MoveKind::R1Insert,
            "r1-" => MoveKind::R1Delete,
            "r2+" => MoveKind::R2Insert,
            "r2-" => MoveKind::R2Delete,
            "r3" => MoveKind::R3,
            "oc" => MoveKind::Oc,
            _ => return None,
        })
    }

    pub const ALL: [MoveKind; 7] = [
        MoveKind::Sv,
        MoveKind::R1Insert,
        MoveKind::R1Delete,
        MoveKind::R2Insert,
        MoveKind::R2Delete,
        MoveKind::R3,
        MoveKind::Oc,
    ];
}
