//! Weyl groups of type `A_{n−1}` (the symmetric group `𝔖_n`) and `B_n` as
//! explicitly enumerated signed permutations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

/// Which Coxeter type an algebra belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// `𝔖_n`, generators `s_1, …, s_{n−1}`.
    A,
    /// `W(B_n)`, generators `s_0, s_1, …, s_{n−1}`.
    B,
}

/// A signed permutation in one-line form: position `j` (0-indexed) holds the
/// image `(j+1)·w`. Composition is on the right, `j·(xy) = (j·x)·y`, so
/// right multiplication by a generator acts on the values: `s_i` (`i ≥ 1`)
/// exchanges the values `±i` and `±(i+1)` and `s_0` negates the value `±1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i8).collect(),
        }
    }

    /// Validates that the absolute values form a permutation of `1..=n`.
    pub fn new(images: Vec<i8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return None;
            }
            seen[a] = true;
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[i8] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    /// Right multiplication by the generator `s_i`.
    pub fn mul_generator(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        for x in images.iter_mut() {
            let a = x.unsigned_abs() as usize;
            let sign = x.signum();
            if i == 0 {
                if a == 1 {
                    *x = -*x;
                }
            } else if a == i {
                *x = sign * (i as i8 + 1);
            } else if a == i + 1 {
                *x = sign * i as i8;
            }
        }
        Self { images }
    }

    /// `xy` under right composition.
    pub fn compose(&self, other: &Self) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| {
                let y = other.images[x.unsigned_abs() as usize - 1];
                x.signum() * y
            })
            .collect();
        Self { images }
    }

    /// Type-B Coxeter length `inv(w) + Σ_{w(j) < 0} |w(j)|`; for an unsigned
    /// permutation this is the inversion count.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut len = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    len += 1;
                }
            }
            if w[i] < 0 {
                len += w[i].unsigned_abs() as usize;
            }
        }
        len
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sentinel in the generator table for a generator the group does not have.
pub const NO_GENERATOR: u32 = u32::MAX;

/// A fully enumerated Weyl group with everything the Hecke arithmetic needs:
/// element indices, lengths, the right action of each generator, and a
/// prefix tree of reduced words rooted at the identity (index 0).
pub struct WeylGroup {
    kind: Kind,
    rank: usize,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, u32>,
    lengths: Vec<u32>,
    /// `right[w][s]` is the index of `w·s_s`, or [`NO_GENERATOR`].
    right: Vec<Vec<u32>>,
    /// `left[w][s]` is the index of `s_s·w`, or [`NO_GENERATOR`].
    left: Vec<Vec<u32>>,
    /// `parent[w] = (w·s, s)` with `s` the smallest right descent of `w`.
    parent: Vec<(u32, u8)>,
    children: Vec<Vec<(u32, u8)>>,
}

impl WeylGroup {
    fn build(kind: Kind, rank: usize) -> Self {
        let gens: Vec<usize> = match kind {
            Kind::A => (1..rank).collect(),
            Kind::B => (0..rank).collect(),
        };
        let id = SignedPermutation::identity(rank);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut lengths = vec![0u32];
        // breadth-first search: BFS distance is the Coxeter length
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            for &s in &gens {
                let ws = w.mul_generator(s);
                if !index.contains_key(&ws) {
                    index.insert(ws.clone(), elements.len() as u32);
                    elements.push(ws);
                    lengths.push(lengths[head] + 1);
                }
            }
            head += 1;
        }
        let right: Vec<Vec<u32>> = elements
            .iter()
            .map(|w| {
                (0..rank)
                    .map(|s| {
                        if gens.contains(&s) {
                            index[&w.mul_generator(s)]
                        } else {
                            NO_GENERATOR
                        }
                    })
                    .collect()
            })
            .collect();
        let gen_perms: Vec<SignedPermutation> = (0..rank)
            .map(|s| SignedPermutation::identity(rank).mul_generator(s))
            .collect();
        let left: Vec<Vec<u32>> = elements
            .iter()
            .map(|w| {
                (0..rank)
                    .map(|s| {
                        if gens.contains(&s) {
                            index[&gen_perms[s].compose(w)]
                        } else {
                            NO_GENERATOR
                        }
                    })
                    .collect()
            })
            .collect();
        let mut parent = vec![(0u32, 0u8); elements.len()];
        let mut children = vec![Vec::new(); elements.len()];
        for w in 1..elements.len() {
            let &s = gens
                .iter()
                .find(|&&s| lengths[right[w][s] as usize] < lengths[w])
                .expect("non-identity element has a right descent");
            let p = right[w][s];
            parent[w] = (p, s as u8);
            children[p as usize].push((w as u32, s as u8));
        }
        Self {
            kind,
            rank,
            elements,
            index,
            lengths,
            right,
            left,
            parent,
            children,
        }
    }

    /// The shared, lazily built group of the given type and rank.
    pub fn get(kind: Kind, rank: usize) -> Arc<WeylGroup> {
        type GroupCache = Mutex<HashMap<(Kind, usize), Arc<WeylGroup>>>;
        static CACHE: OnceLock<GroupCache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache
            .lock()
            .expect("group cache poisoned")
            .get(&(kind, rank))
        {
            return g.clone();
        }
        // build outside the lock; a racing builder produces an identical group
        let g = Arc::new(Self::build(kind, rank));
        cache
            .lock()
            .expect("group cache poisoned")
            .entry((kind, rank))
            .or_insert(g)
            .clone()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, w: u32) -> &SignedPermutation {
        &self.elements[w as usize]
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn length(&self, w: u32) -> u32 {
        self.lengths[w as usize]
    }

    pub fn has_generator(&self, s: usize) -> bool {
        s < self.rank && self.right[0][s] != NO_GENERATOR
    }

    /// Index of `w·s`.
    pub fn mul_generator(&self, w: u32, s: usize) -> u32 {
        let r = self.right[w as usize][s];
        debug_assert_ne!(r, NO_GENERATOR, "generator s_{s} not in group");
        r
    }

    /// Index of `s·w`.
    pub fn left_mul_generator(&self, w: u32, s: usize) -> u32 {
        let r = self.left[w as usize][s];
        debug_assert_ne!(r, NO_GENERATOR, "generator s_{s} not in group");
        r
    }

    pub fn parent(&self, w: u32) -> (u32, usize) {
        let (p, s) = self.parent[w as usize];
        (p, s as usize)
    }

    pub fn children(&self, w: u32) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.children[w as usize]
            .iter()
            .map(|&(c, s)| (c, s as usize))
    }

    /// A reduced word for `w`, read left to right.
    pub fn reduced_word(&self, w: u32) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.lengths[w as usize] as usize);
        let mut u = w;
        while u != 0 {
            let (p, s) = self.parent(u);
            word.push(s);
            u = p;
        }
        word.reverse();
        word
    }
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WeylGroup({:?}, rank {}, order {})",
            self.kind,
            self.rank,
            self.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(WeylGroup::get(Kind::A, 1).order(), 1);
        assert_eq!(WeylGroup::get(Kind::A, 4).order(), 24);
        assert_eq!(WeylGroup::get(Kind::B, 1).order(), 2);
        assert_eq!(WeylGroup::get(Kind::B, 2).order(), 8);
        assert_eq!(WeylGroup::get(Kind::B, 3).order(), 48);
        assert_eq!(WeylGroup::get(Kind::B, 4).order(), 384);
    }

    #[test]
    fn length_formula_matches_bfs() {
        for (kind, n) in [(Kind::A, 5), (Kind::B, 4)] {
            let g = WeylGroup::get(kind, n);
            for w in 0..g.order() as u32 {
                assert_eq!(
                    g.element(w).length() as u32,
                    g.length(w),
                    "{}",
                    g.element(w)
                );
                assert_eq!(g.reduced_word(w).len() as u32, g.length(w));
            }
            let longest = (0..g.order() as u32).map(|w| g.length(w)).max().unwrap();
            let expected = match kind {
                Kind::A => n * (n - 1) / 2,
                Kind::B => n * n,
            };
            assert_eq!(longest as usize, expected);
        }
    }

    #[test]
    fn reduced_words_reproduce_elements() {
        let g = WeylGroup::get(Kind::B, 3);
        for w in 0..g.order() as u32 {
            let mut x = SignedPermutation::identity(3);
            for s in g.reduced_word(w) {
                x = x.mul_generator(s);
            }
            assert_eq!(&x, g.element(w));
        }
    }

    #[test]
    fn compose_is_consistent_with_generators() {
        let g = WeylGroup::get(Kind::B, 3);
        let s1 = SignedPermutation::identity(3).mul_generator(1);
        let s0 = SignedPermutation::identity(3).mul_generator(0);
        for w in g.elements() {
            assert_eq!(w.compose(&s1), w.mul_generator(1));
            assert_eq!(w.compose(&s0), w.mul_generator(0));
        }
    }

    #[test]
    fn left_table_is_left_multiplication() {
        let g = WeylGroup::get(Kind::B, 3);
        for w in 0..g.order() as u32 {
            for s in 0..3 {
                let sw = g.left_mul_generator(w, s);
                let word: Vec<usize> = std::iter::once(s).chain(g.reduced_word(w)).collect();
                let via_right = word.iter().fold(0u32, |u, &t| g.mul_generator(u, t));
                assert_eq!(sw, via_right);
            }
        }
    }

    #[test]
    fn type_a_has_no_s0() {
        let g = WeylGroup::get(Kind::A, 3);
        assert!(!g.has_generator(0));
        assert!(g.has_generator(1) && g.has_generator(2));
        assert!(g.elements().iter().all(|w| w.is_unsigned()));
    }

    #[test]
    fn validation() {
        assert!(SignedPermutation::new(vec![2, -1, 3]).is_some());
        assert!(SignedPermutation::new(vec![2, 2]).is_none());
        assert!(SignedPermutation::new(vec![0, 1]).is_none());
    }
}
