//! Partitions, bipartitions and the tableau data attached to them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0. Ordering is lexicographic on parts, which for
/// partitions of a fixed size refines dominance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A permutation of `{1, …, n}` in one-line form `[1·w, 2·w, …]` (right
/// action), together with one reduced word in the simple transpositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPermutation {
    pub one_line: Vec<usize>,
    pub reduced_word: Vec<usize>,
}

impl TableauPermutation {
    pub fn length(&self) -> usize {
        self.reduced_word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.reduced_word.is_empty()
    }
}

/// Number of inversions of a one-line permutation.
pub fn inversions(one_line: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..one_line.len() {
        for j in i + 1..one_line.len() {
            if one_line[i] > one_line[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// A reduced word `s_{i_1} ⋯ s_{i_k}` for the permutation, with
/// `w = s_{i_1} ⋯ s_{i_k}` under right composition.
pub fn reduced_word(one_line: &[usize]) -> Vec<usize> {
    // strip right descents: w = (w s_i) s_i whenever value i appears after value i+1
    let n = one_line.len();
    let mut w = one_line.to_vec();
    let mut word = Vec::new();
    'outer: loop {
        let mut pos = vec![0; n + 1];
        for (p, &x) in w.iter().enumerate() {
            pos[x] = p;
        }
        for i in 1..n {
            if pos[i] > pos[i + 1] {
                // right-multiplying by s_i swaps the values i and i+1
                w.swap(pos[i], pos[i + 1]);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

impl Partition {
    /// Validates a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    /// Sorts an arbitrary composition into a partition.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)`, 0-indexed, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook length of a cell, 0-indexed.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        self.part(row) + conj.part(col) - row - col - 1
    }

    /// All hook lengths in row-reading order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| self.part(i) + conj.part(j) - i - j - 1)
            .collect()
    }

    /// Signed hook length of cell `(row, col)` of `self` measured against the
    /// diagram of `other`: `λ_i − j + μ'_j − i + 1` with 1-indexed `(i, j)`.
    pub fn mixed_hook(&self, other: &Partition, row: usize, col: usize) -> i64 {
        let other_conj = other.conjugate();
        self.part(row) as i64 - col as i64 + other_conj.part(col) as i64 - row as i64 - 1
    }

    /// Length of the longest element of the Young subgroup `𝔖_λ`.
    pub fn young_longest_length(&self) -> usize {
        self.parts
            .iter()
            .map(|&p| p * (p.saturating_sub(1)) / 2)
            .sum()
    }

    /// `Σ (i−1)·λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// The permutation `w_λ` with `𝔱^λ w_λ = 𝔱_λ`: it sends the entry of each
    /// cell in the row-reading tableau to the entry of the same cell in the
    /// column-reading tableau.
    pub fn w_lambda(&self) -> TableauPermutation {
        let n = self.size();
        let conj = self.conjugate();
        let mut col_start = vec![0usize; conj.len() + 1];
        for j in 0..conj.len() {
            col_start[j + 1] = col_start[j] + conj.part(j);
        }
        let mut one_line = vec![0; n];
        for (k, (i, j)) in self.cells().enumerate() {
            one_line[k] = col_start[j] + i + 1;
        }
        let word = reduced_word(&one_line);
        TableauPermutation {
            one_line,
            reduced_word: word,
        }
    }

    /// `0 ≤ λ_i − λ_{i+1} < e` for all `i`.
    pub fn is_e_restricted(&self, e: usize) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < e)
    }

    /// No part repeated `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> bool {
        self.conjugate().is_e_restricted(e)
    }

    /// Dominance `self ⊴ other`.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn count_standard_tableaux(&self) -> BigUint {
        let mut num = BigUint::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let den: BigUint = self.hook_lengths().into_iter().map(BigUint::from).product();
        num / den
    }

    /// Renders as `[3,2,1]`; the empty partition is `[]`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `μ ⊴ λ`: every partial sum of `μ` is at most the matching partial sum of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("{mu} and {lambda}")));
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..mu.len().max(lambda.len()) {
        a += mu.part(i);
        b += lambda.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    partitions(n).len()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,2,1]`; `[]` and `[0]` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        let parts = if inner.trim().is_empty() {
            vec![]
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered pair of partitions `(λ⁽¹⁾, λ⁽²⁾)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    /// Size of the first component.
    pub fn a(&self) -> usize {
        self.first.size()
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `λ̂ = (λ⁽²⁾, λ⁽¹⁾)`.
    pub fn hat(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// Componentwise conjugate `(λ⁽¹⁾′, λ⁽²⁾′)`.
    pub fn conjugate(&self) -> Bipartition {
        Bipartition::new(self.first.conjugate(), self.second.conjugate())
    }

    pub fn is_e_restricted(&self, e: usize) -> bool {
        self.first.is_e_restricted(e) && self.second.is_e_restricted(e)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Accepts `[2,1]|[1,1,1]` with or without surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        let (a, b) = t
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected [..]|[..], got {s:?}")))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// All `a`-bipartitions of `n`, ordered lexicographically descending on the
/// first component, then the second.
pub fn enumerate_bipartitions(n: usize, a: usize) -> Vec<Bipartition> {
    assert!(a <= n, "a = {a} exceeds n = {n}");
    let seconds = partitions(n - a);
    partitions(a)
        .into_iter()
        .flat_map(|p| {
            seconds
                .iter()
                .map(move |q| Bipartition::new(p.clone(), q.clone()))
        })
        .collect()
}

/// All bipartitions of `n`, grouped by `a` from `n` down to 0.
pub fn all_bipartitions(n: usize) -> Vec<Bipartition> {
    (0..=n)
        .rev()
        .flat_map(|a| enumerate_bipartitions(n, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("[2,1]").conjugate(), p("[2,1]"));
        assert_eq!(p("[3]").conjugate(), p("[1,1,1]"));
        assert_eq!(p("[2,2,1]").conjugate(), p("[3,2]"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p("[1]").hook_lengths(), vec![1]);
        let mut h = p("[2,1]").hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(p("[2]").hook_lengths(), vec![2, 1]);
    }

    #[test]
    fn mixed_hook_agrees_with_hook_on_itself() {
        for lam in partitions(6) {
            for (i, j) in lam.cells() {
                assert_eq!(lam.mixed_hook(&lam, i, j), lam.hook(i, j) as i64);
            }
        }
        // cell (1,1) of [1] against the empty diagram
        assert_eq!(p("[1]").mixed_hook(&Partition::empty(), 0, 0), 0);
    }

    #[test]
    fn young_longest_examples() {
        assert_eq!(p("[1,1,1]").young_longest_length(), 0);
        assert_eq!(p("[2,1]").young_longest_length(), 1);
        assert_eq!(p("[3]").young_longest_length(), 3);
    }

    #[test]
    fn w_lambda_examples() {
        let w = p("[4]").w_lambda();
        assert!(w.is_identity());
        let w = p("[2,1]").w_lambda();
        assert_eq!(w.one_line, vec![1, 3, 2]);
        assert_eq!(w.reduced_word, vec![2]);
        assert_eq!(w.length(), 1);
        assert!(p("[1,1]").w_lambda().is_identity());
        // [2,2]: 1 2 / 3 4 -> 1 3 / 2 4
        assert_eq!(p("[2,2]").w_lambda().one_line, vec![1, 3, 2, 4]);
    }

    #[test]
    fn restricted_examples() {
        assert!(p("[1,1,1]").is_e_restricted(3));
        assert!(!p("[3]").is_e_restricted(3));
        assert!(p("[2,1]").is_e_restricted(3));
        assert!(p("[1,1]").is_e_restricted(2));
        assert!(!p("[2]").is_e_restricted(2));
        assert!(p("[2]").is_e_regular(2));
        assert!(Partition::empty().is_e_restricted(2));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("[1,1,1]"), &p("[3]")).unwrap());
        assert!(dominance_leq(&p("[2,1]"), &p("[2,1]")).unwrap());
        assert!(!dominance_leq(&p("[3]"), &p("[2,1]")).unwrap());
        assert!(matches!(
            dominance_leq(&p("[3]"), &p("[2]")),
            Err(Error::SizeMismatch(_))
        ));
        // incomparable pair
        assert!(!dominance_leq(&p("[3,1,1,1]"), &p("[2,2,2]")).unwrap());
        assert!(!dominance_leq(&p("[2,2,2]"), &p("[3,1,1,1]")).unwrap());
    }

    #[test]
    fn standard_tableaux_examples() {
        assert_eq!(p("[5]").count_standard_tableaux(), BigUint::from(1u32));
        assert_eq!(p("[2,1]").count_standard_tableaux(), BigUint::from(2u32));
        assert_eq!(p("[2,2]").count_standard_tableaux(), BigUint::from(2u32));
        assert_eq!(p("[3,2,1]").count_standard_tableaux(), BigUint::from(16u32));
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 1..=8usize {
            let total: BigUint = partitions(n)
                .iter()
                .map(|l| l.count_standard_tableaux().pow(2))
                .sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn bipartition_enumeration() {
        assert_eq!(
            enumerate_bipartitions(2, 1),
            vec!["[1]|[1]".parse().unwrap()]
        );
        let four = enumerate_bipartitions(4, 2);
        assert_eq!(four.len(), 4);
        assert_eq!(four[0].to_string(), "([2]|[2])");
        assert_eq!(four[3].to_string(), "([1,1]|[1,1])");
        let total: usize = (0..=4).map(|a| enumerate_bipartitions(4, a).len()).sum();
        assert_eq!(total, 20);
        assert_eq!(all_bipartitions(4).len(), 20);
    }

    #[test]
    fn partition_order_and_counts() {
        let ps = partitions(4);
        let rendered: Vec<String> = ps.iter().map(|q| q.to_string()).collect();
        assert_eq!(rendered, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partition_count(10), 42);
    }

    #[test]
    fn parsing() {
        assert_eq!(p("[3,2,1]").parts(), &[3, 2, 1]);
        assert_eq!(p("[ 2 , 1 ]"), p("[2,1]"));
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("[2,0]"), p("[2]"));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        let b: Bipartition = "[2,1]|[1,1,1]".parse().unwrap();
        assert_eq!(b.to_string(), "([2,1]|[1,1,1])");
        assert_eq!(b, "([2,1]|[1,1,1])".parse().unwrap());
        assert_eq!(b.hat().to_string(), "([1,1,1]|[2,1])");
        assert_eq!("[]|[1]".parse::<Bipartition>().unwrap().a(), 0);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        (0usize..=12).prop_flat_map(|n| {
            let all = partitions(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
        }

        #[test]
        fn tableaux_count_divides_factorial(l in arb_partition()) {
            let fact: BigUint = (1..=l.size()).map(BigUint::from).product();
            let f = l.count_standard_tableaux();
            prop_assert_eq!(&fact % &f, BigUint::from(0u32));
        }

        #[test]
        fn w_lambda_length_is_inversion_count(l in arb_partition()) {
            let w = l.w_lambda();
            prop_assert_eq!(w.length(), inversions(&w.one_line));
        }

        #[test]
        fn reduced_word_reproduces_permutation(l in arb_partition()) {
            let w = l.w_lambda();
            let mut x: Vec<usize> = (1..=l.size()).collect();
            for &i in &w.reduced_word {
                for v in x.iter_mut() {
                    if *v == i { *v = i + 1 } else if *v == i + 1 { *v = i }
                }
            }
            prop_assert_eq!(x, w.one_line);
        }
    }
}
