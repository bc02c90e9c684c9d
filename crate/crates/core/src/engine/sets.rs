//! Sum-set containers: a fixed-width bitset over `F_p` and a sorted vector for
//! ordered torsion-free carriers.

/// Subset of `{0, ..., p-1}` as a `p`-bit bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    words: Vec<u64>,
    p: u32,
}

impl ResidueSet {
    pub fn empty(p: u32) -> Self {
        ResidueSet {
            words: vec![0; (p as usize).div_ceil(64)],
            p,
        }
    }

    pub fn insert(&mut self, x: u32) {
        debug_assert!(x < self.p);
        self.words[(x / 64) as usize] |= 1 << (x % 64);
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.p && self.words[(x / 64) as usize] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ResidueSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `self |= src + t (mod p)`.
    pub fn union_rotated(&mut self, src: &ResidueSet, t: u32) {
        let t = t % self.p;
        if t == 0 {
            self.union_with(src);
            return;
        }
        // x + t for x < p - t, and x + t - p for the wrapped tail
        or_shifted_left(&mut self.words, &src.words, t as usize);
        or_shifted_right(&mut self.words, &src.words, (self.p - t) as usize);
        self.trim();
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros();
                w &= w - 1;
                Some(i as u32 * 64 + bit)
            })
        })
    }

    fn trim(&mut self) {
        let rem = self.p % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

fn or_shifted_left(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for j in (ws..dst.len()).rev() {
        let mut w = src[j - ws] << bs;
        if bs > 0 && j > ws {
            w |= src[j - ws - 1] >> (64 - bs);
        }
        dst[j] |= w;
    }
}

fn or_shifted_right(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for j in 0..dst.len().saturating_sub(ws) {
        let mut w = src[j + ws] >> bs;
        if bs > 0 && j + ws + 1 < src.len() {
            w |= src[j + ws + 1] << (64 - bs);
        }
        dst[j] |= w;
    }
}

/// Sorted, deduplicated vector. Translation by a fixed element preserves the
/// order on the carriers that use it, so unions are linear merges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SortedSet<T> {
    items: Vec<T>,
}

impl<T: Ord + Clone> SortedSet<T> {
    pub fn new() -> Self {
        SortedSet { items: Vec::new() }
    }

    pub fn from_sorted(items: Vec<T>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        SortedSet { items }
    }

    pub fn insert(&mut self, x: T) {
        if let Err(i) = self.items.binary_search(&x) {
            self.items.insert(i, x);
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.items
    }

    pub fn union_with(&mut self, other: &SortedSet<T>) {
        self.merge_from(other.items.iter().cloned());
    }

    /// Merges an already sorted stream into the set.
    pub fn merge_from(&mut self, incoming: impl Iterator<Item = T>) {
        let mine = std::mem::take(&mut self.items);
        let mut out = Vec::with_capacity(mine.len());
        let mut a = mine.into_iter().peekable();
        let mut b = incoming.peekable();
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next(),
                (None, Some(_)) => b.next(),
                (Some(x), Some(y)) => match x.cmp(y) {
                    std::cmp::Ordering::Less => a.next(),
                    std::cmp::Ordering::Greater => b.next(),
                    std::cmp::Ordering::Equal => {
                        b.next();
                        a.next()
                    }
                },
            };
            out.extend(next);
        }
        self.items = out;
    }
}

impl<T: Ord + Clone> Default for SortedSet<T> {
    fn default() -> Self {
        Self::new()
    }
}
