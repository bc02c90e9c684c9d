//! Word-sized kernel for `F_p` with `p <= 64`: a subset is a `u64` whose bit
//! `x` marks residue `x`, and translation by `t` is a rotation within the low
//! `p` bits.

use crate::domain::PrimeModulus;

/// Bitmask arithmetic for one prime `p <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskField {
    p: u32,
    full: u64,
}

impl MaskField {
    pub fn new(p: PrimeModulus) -> Option<Self> {
        let p = p.get();
        (p <= 64).then(|| MaskField {
            p,
            full: if p == 64 { u64::MAX } else { (1u64 << p) - 1 },
        })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn full(self) -> u64 {
        self.full
    }

    pub fn mask_of(self, elems: &[u32]) -> u64 {
        elems.iter().fold(0, |m, &x| m | 1 << x)
    }

    /// `{x + t mod p : x in m}`.
    #[inline]
    pub fn rotate(self, m: u64, t: u32) -> u64 {
        if t == 0 {
            return m;
        }
        ((m << t) | (m >> (self.p - t))) & self.full
    }

    /// `a + b` as a sumset of two masks.
    #[inline]
    pub fn sumset(self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        for t in bits(b) {
            out |= self.rotate(a, t);
        }
        out
    }

    /// `L(A_1, ..., A_n)` of a family of masks.
    pub fn linear(self, sets: &[u64]) -> u64 {
        let mut state = ChainState::default();
        let mut next = ChainState::default();
        state.start_linear(sets[0]);
        for &s in &sets[1..] {
            state.step_into(self, s, &mut next);
            std::mem::swap(&mut state, &mut next);
        }
        state.finish_linear()
    }

    /// `C(A_1, ..., A_n)` of a family of masks (`A_1` when `n = 1`).
    pub fn cyclic(self, sets: &[u64]) -> u64 {
        if sets.len() == 1 {
            return sets[0];
        }
        let mut state = ChainState::default();
        let mut next = ChainState::default();
        state.start_cyclic(sets[0]);
        for &s in &sets[1..] {
            state.step_into(self, s, &mut next);
            std::mem::swap(&mut state, &mut next);
        }
        state.finish_cyclic()
    }
}

/// Iterates the set bits of a mask.
#[inline]
pub fn bits(mut m: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros();
        m &= m - 1;
        Some(b)
    })
}

/// Reachable states of the adjacent-distinct chain, grouped in tracks. A
/// linear chain uses a single unpinned track; a cyclic chain uses one track
/// per pinned first element. Each track maps the last element to the mask of
/// reachable partial sums.
#[derive(Debug, Clone, Default)]
pub struct ChainState {
    /// `(pinned first element, or u32::MAX when unpinned; offset into states)`
    tracks: Vec<(u32, usize)>,
    /// `(last element, partial sums)`, each track's run sorted by element.
    states: Vec<(u32, u64)>,
}

const UNPINNED: u32 = u32::MAX;

impl ChainState {
    pub fn start_linear(&mut self, first: u64) {
        self.tracks.clear();
        self.states.clear();
        self.tracks.push((UNPINNED, 0));
        self.states.extend(bits(first).map(|a| (a, 1u64 << a)));
    }

    pub fn start_cyclic(&mut self, first: u64) {
        self.tracks.clear();
        self.states.clear();
        for a in bits(first) {
            self.tracks.push((a, self.states.len()));
            self.states.push((a, 1u64 << a));
        }
    }

    fn track_range(&self, t: usize) -> std::ops::Range<usize> {
        let start = self.tracks[t].1;
        let end = self.tracks.get(t + 1).map_or(self.states.len(), |x| x.1);
        start..end
    }

    /// Appends one more summand drawn from `next_set`.
    pub fn step_into(&self, field: MaskField, next_set: u64, out: &mut ChainState) {
        out.tracks.clear();
        out.states.clear();
        let mut prefix = [0u64; 65];
        let mut suffix = [0u64; 65];
        for t in 0..self.tracks.len() {
            let run = &self.states[self.track_range(t)];
            out.tracks.push((self.tracks[t].0, out.states.len()));
            let k = run.len();
            for j in 0..k {
                prefix[j + 1] = prefix[j] | run[j].1;
            }
            suffix[k] = 0;
            for j in (0..k).rev() {
                suffix[j] = suffix[j + 1] | run[j].1;
            }
            // both runs are sorted, so walk them together
            let mut j = 0;
            for b in bits(next_set) {
                while j < k && run[j].0 < b {
                    j += 1;
                }
                let others = if j < k && run[j].0 == b {
                    prefix[j] | suffix[j + 1]
                } else {
                    prefix[k]
                };
                out.states.push((b, field.rotate(others, b)));
            }
        }
    }

    /// `finish_linear` of the chain extended by `last_set`, without
    /// materializing the final layer.
    pub fn extend_linear(&self, field: MaskField, last_set: u64) -> u64 {
        let mut out = 0;
        let mut prefix = [0u64; 65];
        for t in 0..self.tracks.len() {
            let run = &self.states[self.track_range(t)];
            let k = run.len();
            for j in 0..k {
                prefix[j + 1] = prefix[j] | run[j].1;
            }
            let mut j = 0;
            for b in bits(last_set) {
                while j < k && run[j].0 < b {
                    j += 1;
                }
                let others = if j < k && run[j].0 == b {
                    let mut rest = prefix[j];
                    for s in &run[j + 1..] {
                        rest |= s.1;
                    }
                    rest
                } else {
                    prefix[k]
                };
                out |= field.rotate(others, b);
            }
        }
        out
    }

    /// `finish_cyclic` of the chain extended by `last_set`.
    pub fn extend_cyclic(&self, field: MaskField, last_set: u64) -> u64 {
        let mut out = 0;
        let mut prefix = [0u64; 65];
        for t in 0..self.tracks.len() {
            let first = self.tracks[t].0;
            let run = &self.states[self.track_range(t)];
            let k = run.len();
            for j in 0..k {
                prefix[j + 1] = prefix[j] | run[j].1;
            }
            let mut j = 0;
            for b in bits(last_set) {
                while j < k && run[j].0 < b {
                    j += 1;
                }
                if b == first {
                    continue;
                }
                let others = if j < k && run[j].0 == b {
                    let mut rest = prefix[j];
                    for s in &run[j + 1..] {
                        rest |= s.1;
                    }
                    rest
                } else {
                    prefix[k]
                };
                out |= field.rotate(others, b);
            }
        }
        out
    }

    pub fn finish_linear(&self) -> u64 {
        self.states.iter().fold(0, |m, s| m | s.1)
    }

    pub fn finish_cyclic(&self) -> u64 {
        let mut out = 0;
        for t in 0..self.tracks.len() {
            let first = self.tracks[t].0;
            for &(last, sums) in &self.states[self.track_range(t)] {
                if last != first {
                    out |= sums;
                }
            }
        }
        out
    }
}
