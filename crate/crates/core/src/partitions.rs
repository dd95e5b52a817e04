//! Labeled and unlabeled partitions of `[n]`, their projections, metric,
//! and exhaustive enumeration.
//!
//! A labeled partition assigns each element of `[n]` to one of `k` classes;
//! empty classes are allowed. A set partition is an unordered collection of
//! disjoint non-empty blocks covering `[n]`, kept in increasing order of
//! least element. Elements and class indices are 0-based internally; all
//! text forms are 1-based.
//!
//! Labels are stored densely as a sequence, so restriction is prefix
//! truncation and the prefix metric is a scan; the set-of-classes view is
//! computed on demand as bit vectors.

use std::fmt;

use crate::bitset::Subset;
use crate::error::{Error, Result};

/// Capacity guard for exhaustive enumeration: `k^n` may not exceed this.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

/// A partition of `[n]` into `k` labeled classes, stored as a label sequence.
///
/// `labels[i]` is the 0-based class of element `i`. Empty classes are
/// permitted, so `labels` need not be surjective onto `0..k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPartition {
    n: usize,
    k: usize,
    labels: Vec<u16>,
}

impl LabeledPartition {
    /// Builds from a 0-based label sequence; every label must lie in `0..k`.
    pub fn new(k: usize, labels: Vec<u16>) -> Result<Self> {
        if k == 0 || k > u16::MAX as usize {
            return Err(Error::domain(format!("class count k={k} out of range")));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l as usize >= k) {
            return Err(Error::domain(format!(
                "label {} out of range for k={k}",
                bad + 1
            )));
        }
        Ok(LabeledPartition {
            n: labels.len(),
            k,
            labels,
        })
    }

    /// The constant labeling `E_j`: every element of `[n]` in class `j` (0-based).
    pub fn constant(n: usize, k: usize, j: usize) -> Self {
        assert!(j < k && k <= u16::MAX as usize);
        LabeledPartition {
            n,
            k,
            labels: vec![j as u16; n],
        }
    }

    /// Builds from a class vector `(λ_1, .., λ_k)`; the sets must be disjoint
    /// and cover `[n]`.
    pub fn from_classes(n: usize, classes: &[Subset]) -> Result<Self> {
        let k = classes.len();
        if k == 0 || k > u16::MAX as usize {
            return Err(Error::domain(format!("class count k={k} out of range")));
        }
        let mut labels = vec![u16::MAX; n];
        for (j, class) in classes.iter().enumerate() {
            if class.n() != n {
                return Err(Error::domain("class ground-set size mismatch"));
            }
            for e in class.iter() {
                if labels[e] != u16::MAX {
                    return Err(Error::domain(format!("element {} in two classes", e + 1)));
                }
                labels[e] = j as u16;
            }
        }
        if labels.iter().any(|&l| l == u16::MAX) {
            return Err(Error::domain("classes do not cover the ground set"));
        }
        Ok(LabeledPartition { n, k, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// 0-based label sequence.
    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    /// 0-based class of element `i`.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i] as usize
    }

    /// Class `j` as a subset of the ground set.
    pub fn class(&self, j: usize) -> Subset {
        let mut s = Subset::empty(self.n);
        for (i, &l) in self.labels.iter().enumerate() {
            if l as usize == j {
                s.insert(i);
            }
        }
        s
    }

    /// The class vector `(λ_1, .., λ_k)`.
    pub fn classes(&self) -> Vec<Subset> {
        let mut out = vec![Subset::empty(self.n); self.k];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].insert(i);
        }
        out
    }

    /// Number of elements in each class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// The overlap `∪_i (λ_i ∩ λ'_i)`: the set of elements on which the two
    /// labelings agree.
    pub fn overlap(&self, other: &LabeledPartition) -> Result<Subset> {
        self.check_shape(other)?;
        let mut s = Subset::empty(self.n);
        for i in 0..self.n {
            if self.labels[i] == other.labels[i] {
                s.insert(i);
            }
        }
        Ok(s)
    }

    fn check_shape(&self, other: &LabeledPartition) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::domain(format!(
                "shape mismatch: ({}, {}) vs ({}, {})",
                self.n, self.k, other.n, other.k
            )));
        }
        Ok(())
    }

    /// Rank of this labeling in the lexicographic enumeration order.
    pub fn lex_rank(&self) -> usize {
        let mut r = 0usize;
        for &l in &self.labels {
            r = r * self.k + l as usize;
        }
        r
    }
}

impl fmt::Debug for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledPartition(k={}, \"{}\")", self.k, self)
    }
}

/// Canonical text form: for `k <= 9` a digit string of 1-based labels
/// (`"1122"`), otherwise comma-separated 1-based labels (`"1,2,10"`).
impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 9 {
            for &l in &self.labels {
                write!(f, "{}", l + 1)?;
            }
        } else {
            for (i, &l) in self.labels.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", l + 1)?;
            }
        }
        Ok(())
    }
}

impl LabeledPartition {
    /// Parses the canonical text form; `k` must be supplied because trailing
    /// classes may be empty.
    pub fn parse(s: &str, k: usize) -> Result<Self> {
        let raw: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(format!("bad label {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(format!("bad label character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        let labels = raw
            .into_iter()
            .map(|l| {
                if l == 0 || l > k {
                    Err(Error::parse(format!("label {l} out of range 1..={k}")))
                } else {
                    Ok((l - 1) as u16)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledPartition::new(k, labels)
    }
}

/// A partition of `[n]` into non-empty blocks, listed in increasing order of
/// their least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Subset>,
}

impl SetPartition {
    /// Builds from blocks, validating disjointness and cover, and sorting
    /// into canonical least-element order. Empty sets are rejected.
    pub fn from_blocks(n: usize, mut blocks: Vec<Subset>) -> Result<Self> {
        let mut seen = Subset::empty(n);
        for b in &blocks {
            if b.n() != n {
                return Err(Error::domain("block ground-set size mismatch"));
            }
            if b.is_empty() {
                return Err(Error::domain("empty block"));
            }
            if !seen.is_disjoint(b) {
                return Err(Error::domain("blocks are not disjoint"));
            }
            seen.union_with(b);
        }
        if seen != Subset::full(n) {
            return Err(Error::domain("blocks do not cover the ground set"));
        }
        blocks.sort_by_key(|b| b.min_element().expect("non-empty"));
        Ok(SetPartition { n, blocks })
    }

    /// The partition of `[n]` into singletons, `0_[n]`.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (0..n).map(|e| Subset::from_elements(n, [e])).collect(),
        }
    }

    /// The one-block partition `1_[n]`.
    pub fn one_block(n: usize) -> Self {
        assert!(n > 0);
        SetPartition {
            n,
            blocks: vec![Subset::full(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks, `#π`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in increasing order of least element.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// The 0-based block index of each element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for e in b.iter() {
                out[e] = j;
            }
        }
        out
    }

    /// Whether elements `i` and `j` share a block.
    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(i) && b.contains(j))
    }

    /// The labeled partition listing the blocks as classes `1..=#π` in
    /// least-element order, padded with empty classes up to `k`.
    pub fn to_labeled(&self, k: usize) -> Result<LabeledPartition> {
        if k < self.blocks.len() {
            return Err(Error::domain(format!(
                "k={k} smaller than block count {}",
                self.blocks.len()
            )));
        }
        let mut labels = vec![0u16; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for e in b.iter() {
                labels[e] = j as u16;
            }
        }
        LabeledPartition::new(k, labels)
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition(\"{self}\")")
    }
}

/// Canonical text form: blocks joined by `/` with elements ascending,
/// 1-based. For `n <= 9` elements are concatenated digits (`"1356/2/47/8"`),
/// otherwise comma-separated (`"1,3,10/2"`).
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            if self.n <= 9 {
                for e in b.iter() {
                    write!(f, "{}", e + 1)?;
                }
            } else {
                for (j, e) in b.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", e + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl SetPartition {
    /// Parses the canonical text form; `n` is inferred from the elements.
    pub fn parse(s: &str) -> Result<Self> {
        let mut raw_blocks: Vec<Vec<usize>> = Vec::new();
        for part in s.split('/') {
            let elems: Vec<usize> = if part.contains(',') {
                part.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::parse(format!("bad element {t:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                part.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::parse(format!("bad element character {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            if elems.iter().any(|&e| e == 0) {
                return Err(Error::parse("elements are 1-based"));
            }
            raw_blocks.push(elems);
        }
        let n = raw_blocks
            .iter()
            .flat_map(|b| b.iter())
            .max()
            .copied()
            .ok_or_else(|| Error::parse("empty partition text"))?;
        let blocks = raw_blocks
            .into_iter()
            .map(|b| Subset::from_elements(n, b.into_iter().map(|e| e - 1)))
            .collect();
        SetPartition::from_blocks(n, blocks)
    }
}

/// A permutation of `[n]`, stored as the image sequence `images[i] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::domain("images do not form a bijection"));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Permutation { images: inv }
    }

    /// All `n!` permutations of `[n]`, in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

/// An injective map `[m] -> [n]`, `m <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Injection {
    m: usize,
    n: usize,
    images: Vec<usize>,
}

impl Injection {
    pub fn new(n: usize, images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m > n {
            return Err(Error::domain("domain larger than codomain"));
        }
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n {
                return Err(Error::domain("image out of range"));
            }
            if seen[im] {
                return Err(Error::domain("images are not injective"));
            }
            seen[im] = true;
        }
        Ok(Injection { m, n, images })
    }

    /// The inclusion `[m] ↪ [n]`.
    pub fn inclusion(m: usize, n: usize) -> Result<Self> {
        Injection::new(n, (0..m).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }
}

/// Longest common restriction level of two objects under the dyadic
/// ultrametric `d = 2^(-level)`; `Infinite` means the objects are equal
/// (`d = 0`). Larger agreement means smaller distance, and the derived
/// `Ord` follows agreement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PrefixAgreement {
    Finite(usize),
    Infinite,
}

/// Restriction `λ_{|[m]}`: keeps the first `m` labels.
pub fn restrict(lambda: &LabeledPartition, m: usize) -> Result<LabeledPartition> {
    if m < 1 || m > lambda.n {
        return Err(Error::domain(format!(
            "restriction level {m} out of range 1..={}",
            lambda.n
        )));
    }
    Ok(LabeledPartition {
        n: m,
        k: lambda.k,
        labels: lambda.labels[..m].to_vec(),
    })
}

/// Relabeling `λ^σ` with `(λ^σ)(i) = λ(σ(i))`.
pub fn relabel(lambda: &LabeledPartition, sigma: &Permutation) -> Result<LabeledPartition> {
    if sigma.n() != lambda.n {
        return Err(Error::domain("permutation size mismatch"));
    }
    Ok(LabeledPartition {
        n: lambda.n,
        k: lambda.k,
        labels: (0..lambda.n)
            .map(|i| lambda.labels[sigma.apply(i)])
            .collect(),
    })
}

/// Projection `ψ*(λ) = λ ∘ ψ` along an injection `ψ: [m] -> [n]`.
pub fn project_injection(lambda: &LabeledPartition, psi: &Injection) -> Result<LabeledPartition> {
    if psi.n() != lambda.n {
        return Err(Error::domain("injection codomain mismatch"));
    }
    Ok(LabeledPartition {
        n: psi.m(),
        k: lambda.k,
        labels: (0..psi.m())
            .map(|i| lambda.labels[psi.apply(i)])
            .collect(),
    })
}

/// The block projection `B_n(λ)`: non-empty classes, labels forgotten.
pub fn blocks(lambda: &LabeledPartition) -> SetPartition {
    let mut blocks: Vec<Subset> = lambda
        .classes()
        .into_iter()
        .filter(|c| !c.is_empty())
        .collect();
    blocks.sort_by_key(|b| b.min_element().expect("non-empty"));
    SetPartition {
        n: lambda.n,
        blocks,
    }
}

/// Restriction `π_{|[m]}`: blocks intersected with `[m]`, empties dropped.
pub fn restrict_set(pi: &SetPartition, m: usize) -> Result<SetPartition> {
    if m < 1 || m > pi.n {
        return Err(Error::domain(format!(
            "restriction level {m} out of range 1..={}",
            pi.n
        )));
    }
    let mut blocks: Vec<Subset> = pi
        .blocks
        .iter()
        .map(|b| b.restrict(m))
        .filter(|b| !b.is_empty())
        .collect();
    blocks.sort_by_key(|b| b.min_element().expect("non-empty"));
    Ok(SetPartition { n: m, blocks })
}

/// Relabeling `π^σ` with `i ~ j` iff `σ(i) ~_π σ(j)`.
pub fn relabel_set(pi: &SetPartition, sigma: &Permutation) -> Result<SetPartition> {
    if sigma.n() != pi.n {
        return Err(Error::domain("permutation size mismatch"));
    }
    let inv = sigma.inverse();
    let blocks = pi
        .blocks
        .iter()
        .map(|b| Subset::from_elements(pi.n, b.iter().map(|e| inv.apply(e))))
        .collect();
    SetPartition::from_blocks(pi.n, blocks)
}

/// Projection `ψ'(π)` along an injection: `i ~ j` iff `ψ(i) ~_π ψ(j)`.
pub fn project_injection_set(pi: &SetPartition, psi: &Injection) -> Result<SetPartition> {
    if psi.n() != pi.n {
        return Err(Error::domain("injection codomain mismatch"));
    }
    let block_of = pi.block_of();
    let m = psi.m();
    let mut by_block: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..m {
        by_block
            .entry(block_of[psi.apply(i)])
            .or_default()
            .push(i);
    }
    let blocks = by_block
        .into_values()
        .map(|elems| Subset::from_elements(m, elems))
        .collect();
    SetPartition::from_blocks(m, blocks)
}

/// Length of the longest common label prefix; `Infinite` when `λ = λ'`.
/// The partition metric is `d = 2^(-agreement)` with `d = 0` at `Infinite`.
pub fn distance_exponent(
    a: &LabeledPartition,
    b: &LabeledPartition,
) -> Result<PrefixAgreement> {
    a.check_shape(b)?;
    for i in 0..a.n {
        if a.labels[i] != b.labels[i] {
            return Ok(PrefixAgreement::Finite(i));
        }
    }
    Ok(PrefixAgreement::Infinite)
}

/// Prefix agreement for set partitions: largest `m` with equal restrictions.
pub fn distance_exponent_set(a: &SetPartition, b: &SetPartition) -> Result<PrefixAgreement> {
    if a.n != b.n {
        return Err(Error::domain("size mismatch"));
    }
    let (ba, bb) = (a.block_of(), b.block_of());
    // Restrictions to [m] agree iff the equivalences agree on all pairs in [m].
    for m in 1..=a.n {
        let i = m - 1;
        for j in 0..i {
            if (ba[i] == ba[j]) != (bb[i] == bb[j]) {
                return Ok(PrefixAgreement::Finite(m - 1));
            }
        }
    }
    Ok(PrefixAgreement::Infinite)
}

/// Coagulation of `π` by `π'` (a partition of `[k']`, `k' >= #π`): block `i`
/// of the result is the union of the blocks of `π` indexed by the `i`-th
/// block of `π'`, indices beyond `#π` ignored, empties dropped.
pub fn coag(pi: &SetPartition, pi_prime: &SetPartition) -> Result<SetPartition> {
    let r = pi.num_blocks();
    if pi_prime.n < r {
        return Err(Error::domain(format!(
            "coagulating partition covers [{}] but π has {} blocks",
            pi_prime.n, r
        )));
    }
    // π's blocks are in least-element order by the type invariant; definition
    // (block index -> block) depends on it.
    debug_assert!(pi
        .blocks
        .windows(2)
        .all(|w| w[0].min_element() < w[1].min_element()));
    let mut blocks = Vec::new();
    for group in &pi_prime.blocks {
        let mut merged = Subset::empty(pi.n);
        for j in group.iter().filter(|&j| j < r) {
            merged.union_with(&pi.blocks[j]);
        }
        if !merged.is_empty() {
            blocks.push(merged);
        }
    }
    SetPartition::from_blocks(pi.n, blocks)
}

/// Iterator over all `k^n` labeled partitions in lexicographic label order.
pub struct LabeledEnumerator {
    n: usize,
    k: usize,
    next: Option<Vec<u16>>,
}

impl Iterator for LabeledEnumerator {
    type Item = LabeledPartition;

    fn next(&mut self) -> Option<LabeledPartition> {
        let labels = self.next.take()?;
        let item = LabeledPartition {
            n: self.n,
            k: self.k,
            labels: labels.clone(),
        };
        let mut succ = labels;
        // increment base-k counter, last position fastest
        let mut i = self.n;
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if (succ[i] as usize) < self.k - 1 {
                succ[i] += 1;
                for l in succ[i + 1..].iter_mut() {
                    *l = 0;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(item)
    }
}

/// Enumerates all labeled `k`-partitions of `[n]`, lexicographically in the
/// label sequence. Guarded by [`ENUMERATION_GUARD`].
pub fn enumerate(n: usize, k: usize) -> Result<LabeledEnumerator> {
    if n == 0 || k == 0 {
        return Err(Error::domain("n and k must be positive"));
    }
    count_labelings(n, k)?;
    Ok(LabeledEnumerator {
        n,
        k,
        next: Some(vec![0; n]),
    })
}

/// `k^n`, guarded.
pub fn count_labelings(n: usize, k: usize) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total
            .checked_mul(k as u64)
            .filter(|&t| t <= ENUMERATION_GUARD)
            .ok_or_else(|| {
                Error::capacity(format!("k^n = {k}^{n} exceeds {ENUMERATION_GUARD}"))
            })?;
    }
    Ok(total)
}

/// All set partitions of `[n]` with at most `max_blocks` blocks.
pub fn enumerate_set_partitions(n: usize, max_blocks: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    count_labelings(n, max_blocks.max(2))?;
    // Grow restricted-growth strings; block index of element i is at most
    // one more than the max over earlier elements.
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    fn rec(
        i: usize,
        n: usize,
        max_blocks: usize,
        used: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<SetPartition>,
    ) {
        if i == n {
            let mut blocks = vec![Vec::new(); used];
            for (e, &b) in assignment.iter().enumerate() {
                blocks[b].push(e);
            }
            let blocks = blocks
                .into_iter()
                .map(|b| Subset::from_elements(n, b))
                .collect();
            out.push(SetPartition::from_blocks(n, blocks).expect("valid by construction"));
            return;
        }
        for b in 0..=used.min(max_blocks - 1) {
            if b == used && b >= max_blocks {
                continue;
            }
            assignment[i] = b;
            rec(
                i + 1,
                n,
                max_blocks,
                used.max(b + 1),
                assignment,
                out,
            );
        }
    }
    rec(0, n, max_blocks, 0, &mut assignment, &mut out);
    Ok(out)
}
