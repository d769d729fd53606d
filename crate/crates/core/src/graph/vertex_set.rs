use std::fmt;

/// Maximum number of vertices any graph in this crate may have.
///
/// Raising it only requires changing this constant; every bit row is sized
/// from it at compile time.
pub const MAX_VERTICES: usize = 512;

pub(crate) const WORDS: usize = MAX_VERTICES.div_ceil(64);

/// Fixed-capacity bit set over the vertex ids `0..capacity` of one graph.
///
/// Sets are `Copy` so that solvers can keep them on the stack. All binary
/// operations assume both operands share the same capacity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; WORDS],
    capacity: u16,
}

impl VertexSet {
    /// The empty set over `capacity` vertices.
    ///
    /// Panics if `capacity` exceeds [`MAX_VERTICES`]; graph constructors
    /// check this before building any set.
    pub fn empty(capacity: usize) -> Self {
        assert!(
            capacity <= MAX_VERTICES,
            "vertex set capacity {capacity} exceeds {MAX_VERTICES}"
        );
        Self {
            words: [0; WORDS],
            capacity: capacity as u16,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        let whole = capacity / 64;
        for w in &mut s.words[..whole] {
            *w = u64::MAX;
        }
        let rest = capacity % 64;
        if rest > 0 {
            s.words[whole] = (1u64 << rest) - 1;
        }
        s
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut s = Self::empty(capacity);
        s.insert(v);
        s
    }

    pub fn from_iter_with_capacity<I: IntoIterator<Item = usize>>(capacity: usize, it: I) -> Self {
        let mut s = Self::empty(capacity);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity as usize
    }

    #[inline]
    fn used_words(&self) -> usize {
        (self.capacity as usize).div_ceil(64)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity as usize && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`; returns whether it was absent.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity as usize, "vertex {v} out of range");
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity as usize {
            return false;
        }
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words[..self.used_words()]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words[..self.used_words()].iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.capacity()).difference(self)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.used_words()).all(|i| self.words[i] & !other.words[i] == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        (0..self.used_words()).any(|i| self.words[i] & other.words[i] != 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for i in 0..self.used_words() {
            self.words[i] |= other.words[i];
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &Self) {
        for i in 0..self.used_words() {
            self.words[i] &= other.words[i];
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &Self) {
        for i in 0..self.used_words() {
            self.words[i] &= !other.words[i];
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.capacity, other.capacity, "capacity mismatch");
        let mut out = Self::empty(self.capacity());
        for i in 0..self.used_words() {
            out.words[i] = f(self.words[i], other.words[i]);
        }
        out
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.set.used_words() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        for cap in [0, 1, 63, 64, 65, 130, MAX_VERTICES] {
            let full = VertexSet::full(cap);
            assert_eq!(full.len(), cap);
            assert!(full.complement().is_empty());
            assert_eq!(VertexSet::empty(cap).complement(), full);
        }
    }

    #[test]
    fn insert_remove_iter() {
        let mut s = VertexSet::empty(200);
        for v in [199, 0, 64, 63, 128] {
            assert!(s.insert(v));
        }
        assert!(!s.insert(64));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 128, 199]);
        assert!(s.remove(63));
        assert!(!s.remove(63));
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
        assert!(!s.contains(500));
    }

    #[test]
    fn algebra() {
        let a = VertexSet::from_iter_with_capacity(10, [1, 2, 3]);
        let b = VertexSet::from_iter_with_capacity(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(a.intersects(&b));
        assert!(VertexSet::singleton(10, 3).is_subset(&a));
        assert_eq!(a.complement().complement(), a);
    }
}
