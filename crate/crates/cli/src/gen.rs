//! Seeded random generators for the property suites. ChaCha8 keyed by a
//! `u64` seed, so every run is reproducible across platforms.

use linkhom_core::gauss::{Arrow, Endpoint, GaussDiagram, MoveKind};
use linkhom_core::word::{Letter, Sign, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen::<bool>() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::new(rng.gen_range(1..=n), sign(rng)));
    Word::reduce(letters, n).expect("generated letters are in range")
}

/// A random diagram built by appending endpoints strand by strand, which
/// keeps every slot unique.
pub fn diagram(rng: &mut ChaCha8Rng, n: usize, max_arrows: usize) -> GaussDiagram {
    let count = rng.gen_range(0..=max_arrows);
    let mut next = vec![1usize; n + 1];
    let mut arrows = Vec::new();
    for _ in 0..count {
        let ts = rng.gen_range(1..=n);
        let hs = rng.gen_range(1..=n);
        let tail = Endpoint::new(ts, next[ts]);
        next[ts] += 1;
        let head = Endpoint::new(hs, next[hs]);
        next[hs] += 1;
        arrows.push(Arrow::new(tail, head, sign(rng)));
    }
    GaussDiagram::new(n, arrows).expect("appended endpoints are valid")
}

/// Realization targets: `targets[i]` avoids the letter `x_{i+1}`.
pub fn targets(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<Word> {
    (1..=n)
        .map(|i| {
            let len = rng.gen_range(0..=max_len);
            let letters = (0..len).map(|_| {
                let mut g = rng.gen_range(1..=n);
                while g == i {
                    g = rng.gen_range(1..=n);
                }
                Letter::new(g, sign(rng))
            });
            Word::reduce(letters, n).expect("generated letters are in range")
        })
        .collect()
}

/// Ensures at least one move of `kind` is applicable, seeding the needed
/// pattern at the top of the diagram when none is present.
pub fn diagram_with_move(rng: &mut ChaCha8Rng, d: &GaussDiagram, kind: MoveKind) -> GaussDiagram {
    if !d.enumerate_moves(kind).is_empty() {
        return d.clone();
    }
    let n = d.n();
    let mut arrows = d.arrows().to_vec();
    let mut slots: Vec<usize> = (0..=n)
        .map(|s| if s == 0 { 0 } else { d.slots_on(s) })
        .collect();
    let top = |s: usize, slots: &mut Vec<usize>| {
        slots[s] += 1;
        Endpoint::new(s, slots[s])
    };
    match kind {
        MoveKind::Sv | MoveKind::R1Delete => {
            let s = rng.gen_range(1..=n);
            let tail = top(s, &mut slots);
            let head = top(s, &mut slots);
            let sgn = sign(rng);
            if rng.gen::<bool>() {
                arrows.push(Arrow::new(tail, head, sgn));
            } else {
                arrows.push(Arrow::new(head, tail, sgn));
            }
        }
        MoveKind::R2Delete => {
            let ts = rng.gen_range(1..=n);
            let hs = rng.gen_range(1..=n);
            let sgn = sign(rng);
            let t1 = top(ts, &mut slots);
            let t2 = top(ts, &mut slots);
            let h1 = top(hs, &mut slots);
            let h2 = top(hs, &mut slots);
            if rng.gen::<bool>() {
                arrows.push(Arrow::new(t1, h1, sgn));
                arrows.push(Arrow::new(t2, h2, sgn.flip()));
            } else {
                arrows.push(Arrow::new(t1, h2, sgn));
                arrows.push(Arrow::new(t2, h1, sgn.flip()));
            }
        }
        MoveKind::R3 => {
            // braid-like triangle over three distinct strands
            assert!(n >= 3, "R3 seeding needs at least 3 strands");
            let mut picks = [0usize; 3];
            picks[0] = rng.gen_range(1..=n);
            picks[1] = loop {
                let v = rng.gen_range(1..=n);
                if v != picks[0] {
                    break v;
                }
            };
            picks[2] = loop {
                let v = rng.gen_range(1..=n);
                if v != picks[0] && v != picks[1] {
                    break v;
                }
            };
            let [a, b, c] = picks;
            let s12 = sign(rng);
            let s23 = sign(rng);
            let t12 = top(a, &mut slots);
            let t13 = top(a, &mut slots);
            let h12 = top(b, &mut slots);
            let t23 = top(b, &mut slots);
            let h13 = top(c, &mut slots);
            let h23 = top(c, &mut slots);
            arrows.push(Arrow::new(t12, h12, s12));
            arrows.push(Arrow::new(t13, h13, s12));
            arrows.push(Arrow::new(t23, h23, s23));
        }
        MoveKind::Oc => {
            let ts = rng.gen_range(1..=n);
            let h1 = rng.gen_range(1..=n);
            let h2 = rng.gen_range(1..=n);
            let t1 = top(ts, &mut slots);
            let t2 = top(ts, &mut slots);
            let e1 = top(h1, &mut slots);
            let e2 = top(h2, &mut slots);
            arrows.push(Arrow::new(t1, e1, sign(rng)));
            arrows.push(Arrow::new(t2, e2, sign(rng)));
        }
        MoveKind::R1Insert | MoveKind::R2Insert => unreachable!("insertions always apply"),
    }
    GaussDiagram::new(n, arrows).expect("seeded pattern is valid")
}
