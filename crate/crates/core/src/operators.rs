//! Partition operators: `k x k` set-valued matrices whose columns are
//! labeled `k`-partitions of `[n]`, together with map tables and column
//! arrays for general Lipschitz maps.
//!
//! A matrix over subsets of `[n]` multiplies like a real matrix with `∩` for
//! multiplication and `∪` for addition, and acts on a partition by
//! `(Mλ)_i = ∪_j (M_ij ∩ λ_j)`. Because every column of a partition operator
//! partitions `[n]`, both operations collapse to label composition: element
//! `e` of `Mλ` carries the label that column `λ(e)` of `M` assigns to `e`.
//! This makes application and multiplication `O(n)` and `O(nk)` and keeps the
//! column invariant closed by construction; the set-valued route is used as
//! an independent oracle in tests.

use std::fmt;

use crate::bitset::Subset;
use crate::error::{Error, Result};
use crate::partitions::{
    count_labelings, enumerate, relabel, LabeledPartition, Permutation, SetPartition,
};

/// A `k x k` partition operator over `[n]`: column `j` is a labeled
/// `k`-partition of `[n]`, and entry `(i, j)` is class `i` of column `j`.
///
/// Equality is structural (entrywise set equality); the column
/// representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionOperator {
    n: usize,
    k: usize,
    columns: Vec<LabeledPartition>,
}

impl PartitionOperator {
    /// Builds from columns; all must share `n` and `k`, with exactly `k` columns.
    pub fn from_columns(columns: Vec<LabeledPartition>) -> Result<Self> {
        let k = columns.len();
        if k == 0 {
            return Err(Error::domain("operator needs at least one column"));
        }
        let n = columns[0].n();
        for c in &columns {
            if c.n() != n || c.k() != k {
                return Err(Error::domain(format!(
                    "column shape ({}, {}) does not match operator shape ({n}, {k})",
                    c.n(),
                    c.k()
                )));
            }
        }
        Ok(PartitionOperator { n, k, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Column `M^j`.
    pub fn column(&self, j: usize) -> &LabeledPartition {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[LabeledPartition] {
        &self.columns
    }

    /// Entry `M_ij` as an element set.
    pub fn entry(&self, i: usize, j: usize) -> Subset {
        self.columns[j].class(i)
    }

    pub fn is_identity(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, c)| c.labels().iter().all(|&l| l as usize == j))
    }
}

/// The identity operator `I_n^k`: diagonal entries `[n]`, off-diagonal empty.
pub fn op_identity(n: usize, k: usize) -> PartitionOperator {
    PartitionOperator {
        n,
        k,
        columns: (0..k)
            .map(|j| LabeledPartition::constant(n, k, j))
            .collect(),
    }
}

/// Matrix product `(MM')_ij = ∪_l (M_il ∩ M'_lj)`; equivalently `M` applied
/// to each column of `M'`. Closure in the operator space holds by
/// construction.
pub fn op_multiply(m: &PartitionOperator, m2: &PartitionOperator) -> Result<PartitionOperator> {
    if m.n != m2.n || m.k != m2.k {
        return Err(Error::domain("operator shape mismatch"));
    }
    let columns = m2
        .columns
        .iter()
        .map(|c| op_apply(m, c).expect("shapes checked"))
        .collect();
    Ok(PartitionOperator {
        n: m.n,
        k: m.k,
        columns,
    })
}

/// Action `(Mλ)_i = ∪_j (M_ij ∩ λ_j)`: element `e` takes the label column
/// `λ(e)` of `M` gives it.
pub fn op_apply(m: &PartitionOperator, lambda: &LabeledPartition) -> Result<LabeledPartition> {
    if m.n != lambda.n() || m.k != lambda.k() {
        return Err(Error::domain("operator/partition shape mismatch"));
    }
    let labels = (0..m.n)
        .map(|e| m.columns[lambda.label(e)].labels()[e])
        .collect();
    LabeledPartition::new(m.k, labels)
}

/// Entrywise restriction to `[m]`, the matrix `I_m^k M = M I_m^k`.
pub fn op_restrict(m: &PartitionOperator, level: usize) -> Result<PartitionOperator> {
    if level < 1 || level > m.n {
        return Err(Error::domain(format!(
            "restriction level {level} out of range 1..={}",
            m.n
        )));
    }
    let columns = m
        .columns
        .iter()
        .map(|c| crate::partitions::restrict(c, level).expect("level checked"))
        .collect();
    Ok(PartitionOperator {
        n: level,
        k: m.k,
        columns,
    })
}

/// Relabeling `M^σ`: every column relabeled by `σ`.
pub fn op_relabel(m: &PartitionOperator, sigma: &Permutation) -> Result<PartitionOperator> {
    let columns = m
        .columns
        .iter()
        .map(|c| relabel(c, sigma))
        .collect::<Result<_>>()?;
    Ok(PartitionOperator {
        n: m.n,
        k: m.k,
        columns,
    })
}

/// The coagulation operator `M_π'` for a partition `π'` of `[k]`:
/// `M_ij = [n]` if `j` lies in the `i`-th block of `π'`, else empty.
/// Applied to the partition listing `π`'s blocks as classes it reproduces
/// `Coag(π, π')` after dropping labels.
pub fn op_from_coag(pi_prime: &SetPartition, n: usize, k: usize) -> Result<PartitionOperator> {
    if pi_prime.n() != k {
        return Err(Error::domain(format!(
            "coagulating partition covers [{}], expected [{k}]",
            pi_prime.n()
        )));
    }
    // column j is the constant labeling by the block index of j in π'
    let block_of = pi_prime.block_of();
    let columns = (0..k)
        .map(|j| LabeledPartition::constant(n, k, block_of[j]))
        .collect();
    Ok(PartitionOperator { n, k, columns })
}

/// The cyclic operator `M_λ` whose `j`-th column is the `j`-th cyclic shift
/// of the classes of `λ`: entry `(i, j)` is class `(i - j) mod k` of `λ`.
pub fn op_cyclic(lambda: &LabeledPartition) -> PartitionOperator {
    let k = lambda.k();
    let columns = (0..k)
        .map(|j| {
            let labels = lambda
                .labels()
                .iter()
                .map(|&l| ((l as usize + j) % k) as u16)
                .collect();
            LabeledPartition::new(k, labels).expect("labels in range")
        })
        .collect();
    PartitionOperator {
        n: lambda.n(),
        k,
        columns,
    }
}

/// The matrix transpose, when it is itself a partition operator. The
/// transposed columns partition `[n]` exactly when, for every element `e`,
/// the map `i ↦ (label of e in column i)` is a permutation of `[k]`.
pub fn op_transpose(m: &PartitionOperator) -> Result<PartitionOperator> {
    let k = m.k;
    // transposed column j: element e gets label i where column i of M labels e with j
    let mut labels: Vec<Vec<u16>> = vec![vec![0; m.n]; k];
    for e in 0..m.n {
        let mut seen = vec![false; k];
        for i in 0..k {
            let j = m.columns[i].label(e);
            if seen[j] {
                return Err(Error::NotPartitionOperator(format!(
                    "element {} appears twice in transposed column {}",
                    e + 1,
                    j + 1
                )));
            }
            seen[j] = true;
            labels[j][e] = i as u16;
        }
    }
    let columns = labels
        .into_iter()
        .map(|l| LabeledPartition::new(k, l).expect("labels in range"))
        .collect();
    Ok(PartitionOperator {
        n: m.n,
        k,
        columns,
    })
}

/// Operator text form: rows separated by `;`, entries in row order as
/// ascending 1-based element lists in braces, `{}` for empty.
impl fmt::Display for PartitionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.k {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.k {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{{")?;
                for (idx, e) in self.entry(i, j).iter().enumerate() {
                    if idx > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", e + 1)?;
                }
                write!(f, "}}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PartitionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionOperator(n={}, k={}, \"{self}\")", self.n, self.k)
    }
}

impl PartitionOperator {
    /// Parses the operator text form; `n` is inferred from the largest
    /// element (every element of `[n]` appears in every column).
    pub fn parse(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(';').collect();
        let k = rows.len();
        let mut entries: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k);
        for row in rows {
            let mut row_entries = Vec::new();
            let mut depth = 0usize;
            let mut current = String::new();
            for c in row.trim().chars() {
                match c {
                    '{' => {
                        depth += 1;
                        current.push(c);
                    }
                    '}' => {
                        if depth == 0 {
                            return Err(Error::parse("unbalanced braces"));
                        }
                        depth -= 1;
                        current.push(c);
                    }
                    ',' if depth == 0 => {
                        row_entries.push(std::mem::take(&mut current));
                    }
                    _ => current.push(c),
                }
            }
            if depth != 0 {
                return Err(Error::parse("unbalanced braces"));
            }
            row_entries.push(current);
            if row_entries.len() != k {
                return Err(Error::parse(format!(
                    "row has {} entries, expected {k}",
                    row_entries.len()
                )));
            }
            let parsed = row_entries
                .into_iter()
                .map(|t| {
                    let t = t.trim().to_string();
                    let inner = t
                        .strip_prefix('{')
                        .and_then(|t| t.strip_suffix('}'))
                        .ok_or_else(|| Error::parse(format!("entry {t:?} not in braces")))?;
                    if inner.trim().is_empty() {
                        return Ok(Vec::new());
                    }
                    inner
                        .split(',')
                        .map(|e| {
                            let e = e
                                .trim()
                                .parse::<usize>()
                                .map_err(|_| Error::parse(format!("bad element {e:?}")))?;
                            if e == 0 {
                                return Err(Error::parse("elements are 1-based"));
                            }
                            Ok(e - 1)
                        })
                        .collect()
                })
                .collect::<Result<Vec<Vec<usize>>>>()?;
            entries.push(parsed);
        }
        let n = entries
            .iter()
            .flatten()
            .flatten()
            .max()
            .map(|&e| e + 1)
            .unwrap_or(0);
        if n == 0 {
            return Err(Error::parse("operator mentions no elements"));
        }
        let columns = (0..k)
            .map(|j| {
                let classes: Vec<Subset> = (0..k)
                    .map(|i| Subset::from_elements(n, entries[i][j].iter().copied()))
                    .collect();
                LabeledPartition::from_classes(n, &classes)
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionOperator::from_columns(columns)
    }
}

/// The level-`n` restriction of a map on partitions, tabulated on all `k^n`
/// inputs in lexicographic order. Whether the table is the restriction of a
/// Lipschitz or strongly Lipschitz map is checked, never assumed.
#[derive(Clone, PartialEq, Eq)]
pub struct MapTable {
    n: usize,
    k: usize,
    outputs: Vec<LabeledPartition>,
}

impl MapTable {
    /// Tabulates `f` on every labeled `k`-partition of `[n]`. Guarded by the
    /// enumeration capacity.
    pub fn from_fn(
        n: usize,
        k: usize,
        mut f: impl FnMut(&LabeledPartition) -> LabeledPartition,
    ) -> Result<Self> {
        let mut outputs = Vec::with_capacity(count_labelings(n, k)? as usize);
        for lambda in enumerate(n, k)? {
            let out = f(&lambda);
            if out.n() != n || out.k() != k {
                return Err(Error::domain("map output shape mismatch"));
            }
            outputs.push(out);
        }
        Ok(MapTable { n, k, outputs })
    }

    /// The table of `λ ↦ Mλ`.
    pub fn from_operator(m: &PartitionOperator) -> Result<Self> {
        MapTable::from_fn(m.n(), m.k(), |lambda| {
            op_apply(m, lambda).expect("shapes agree")
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, lambda: &LabeledPartition) -> &LabeledPartition {
        &self.outputs[lambda.lex_rank()]
    }

    pub fn is_identity(&self) -> bool {
        enumerate(self.n, self.k)
            .expect("table exists")
            .all(|l| *self.get(&l) == l)
    }

    /// Inputs in lexicographic order paired with outputs.
    pub fn iter(&self) -> impl Iterator<Item = (LabeledPartition, &LabeledPartition)> + '_ {
        enumerate(self.n, self.k)
            .expect("table exists")
            .zip(self.outputs.iter())
    }
}

impl fmt::Debug for MapTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MapTable(n={}, k={}, {} entries)",
            self.n,
            self.k,
            self.outputs.len()
        )
    }
}

/// Searches for a pair violating the strong Lipschitz condition
/// `overlap(F(λ), F(λ')) ⊇ overlap(λ, λ')`.
///
/// The condition is equivalent to: for every element `e` and label `j`, the
/// image label `F(λ)(e)` is constant over all `λ` with `λ(e) = j`. The scan
/// is `O(n · k^n)` instead of a quadratic pair sweep.
pub fn strong_lipschitz_witness(
    table: &MapTable,
) -> Option<(LabeledPartition, LabeledPartition)> {
    let (n, k) = (table.n, table.k);
    // first[(e, j)] = (input index, image label) of the first λ seen with λ(e) = j
    let mut first: Vec<Option<(usize, u16)>> = vec![None; n * k];
    for (idx, lambda) in enumerate(n, k).expect("table exists").enumerate() {
        let image = &table.outputs[idx];
        for e in 0..n {
            let slot = e * k + lambda.label(e);
            match first[slot] {
                None => first[slot] = Some((idx, image.labels()[e])),
                Some((prev_idx, prev_label)) => {
                    if prev_label != image.labels()[e] {
                        let prev = enumerate(n, k)
                            .expect("table exists")
                            .nth(prev_idx)
                            .expect("index in range");
                        return Some((prev, lambda));
                    }
                }
            }
        }
    }
    None
}

/// Whether the tabulated map preserves overlaps (strong Lipschitz).
pub fn is_strongly_lipschitz(table: &MapTable) -> bool {
    strong_lipschitz_witness(table).is_none()
}

/// Reconstructs the unique operator inducing a strongly Lipschitz table:
/// column `j` is the image of the constant labeling `E_j`. Fails with a
/// witness pair when the table is not strongly Lipschitz.
pub fn op_from_table(table: &MapTable) -> Result<PartitionOperator> {
    if let Some((lhs, rhs)) = strong_lipschitz_witness(table) {
        return Err(Error::NotStronglyLipschitz {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let columns = (0..table.k)
        .map(|j| {
            table
                .get(&LabeledPartition::constant(table.n, table.k, j))
                .clone()
        })
        .collect();
    PartitionOperator::from_columns(columns)
}

/// Checks that tables for levels `1..=n` form a compatible Lipschitz
/// sequence: each level-`(m+1)` table is `m`-local and induces the level-`m`
/// table under restriction.
pub fn is_lipschitz_tables(tables: &[MapTable]) -> Result<bool> {
    if tables.is_empty() {
        return Err(Error::domain("no tables given"));
    }
    let k = tables[0].k;
    for (i, t) in tables.iter().enumerate() {
        if t.n != i + 1 {
            return Err(Error::domain(format!(
                "table {i} is at level {}, expected {}",
                t.n,
                i + 1
            )));
        }
        if t.k != k {
            return Err(Error::domain("tables do not share k"));
        }
    }
    for w in tables.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let m = lo.n;
        for (lambda, image) in hi.iter() {
            let restricted_in = crate::partitions::restrict(&lambda, m)?;
            let restricted_out = crate::partitions::restrict(image, m)?;
            if *lo.get(&restricted_in) != restricted_out {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An array of labeled partitions `(M^i_j : i ∈ [k], j ∈ {0..n})` defining a
/// Lipschitz (not necessarily strongly Lipschitz) map: on input `λ` the
/// operator column `i` is the entry indexed by the least element of class
/// `λ_i` (index 0 for an empty class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnArray {
    n: usize,
    k: usize,
    /// `entries[i][j]`: row `i ∈ 0..k`, minima index `j ∈ 0..=n`.
    entries: Vec<Vec<LabeledPartition>>,
}

impl ColumnArray {
    pub fn new(n: usize, k: usize, entries: Vec<Vec<LabeledPartition>>) -> Result<Self> {
        if entries.len() != k {
            return Err(Error::domain(format!(
                "array has {} rows, expected {k}",
                entries.len()
            )));
        }
        for row in &entries {
            if row.len() != n + 1 {
                return Err(Error::domain(format!(
                    "array row has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            for entry in row {
                if entry.n() != n || entry.k() != k {
                    return Err(Error::domain("array entry shape mismatch"));
                }
            }
        }
        Ok(ColumnArray { n, k, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> &LabeledPartition {
        &self.entries[i][j]
    }

    /// The least element (1-based) of each class of `λ`, 0 for empty classes.
    pub fn minima(lambda: &LabeledPartition) -> Vec<usize> {
        let mut m = vec![0usize; lambda.k()];
        for e in (0..lambda.n()).rev() {
            m[lambda.label(e)] = e + 1;
        }
        m
    }

    /// The selected operator `A_λ`, restricted to `λ`'s level.
    pub fn select(&self, lambda: &LabeledPartition) -> Result<PartitionOperator> {
        if lambda.n() > self.n || lambda.k() != self.k {
            return Err(Error::domain(format!(
                "input shape ({}, {}) outside array range ({}, {})",
                lambda.n(),
                lambda.k(),
                self.n,
                self.k
            )));
        }
        let columns = ColumnArray::minima(lambda)
            .into_iter()
            .enumerate()
            .map(|(i, m_i)| {
                let entry = &self.entries[i][m_i];
                crate::partitions::restrict(entry, lambda.n())
            })
            .collect::<Result<_>>()?;
        PartitionOperator::from_columns(columns)
    }
}

/// Applies the array map `F_A(λ) = A_λ λ`.
pub fn array_apply(array: &ColumnArray, lambda: &LabeledPartition) -> Result<LabeledPartition> {
    op_apply(&array.select(lambda)?, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{blocks, coag, distance_exponent, restrict};

    fn lp(s: &str, k: usize) -> LabeledPartition {
        LabeledPartition::parse(s, k).unwrap()
    }

    /// Lattice-matrix multiply on raw entry grids: the union-of-intersections
    /// oracle for `op_multiply` and `op_apply`.
    fn lattice_multiply(a: &[Vec<Subset>], b: &[Vec<Subset>]) -> Vec<Vec<Subset>> {
        let k = a.len();
        let n = a[0][0].n();
        (0..k)
            .map(|i| {
                (0..b[0].len())
                    .map(|j| {
                        let mut acc = Subset::empty(n);
                        for (l, row) in b.iter().enumerate() {
                            acc.union_with(&a[i][l].intersect(&row[j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    fn entry_grid(m: &PartitionOperator) -> Vec<Vec<Subset>> {
        (0..m.k())
            .map(|i| (0..m.k()).map(|j| m.entry(i, j)).collect())
            .collect()
    }

    fn column_grid(l: &LabeledPartition) -> Vec<Vec<Subset>> {
        l.classes().into_iter().map(|c| vec![c]).collect()
    }

    fn all_operators(n: usize, k: usize) -> Vec<PartitionOperator> {
        let cols: Vec<LabeledPartition> = enumerate(n, k).unwrap().collect();
        let total = cols.len().pow(k as u32);
        (0..total)
            .map(|mut idx| {
                let mut chosen = Vec::with_capacity(k);
                for _ in 0..k {
                    chosen.push(cols[idx % cols.len()].clone());
                    idx /= cols.len();
                }
                PartitionOperator::from_columns(chosen).unwrap()
            })
            .collect()
    }

    #[test]
    fn example_operator_action() {
        // n = 6, k = 2 worked action
        let m = PartitionOperator::parse("{2,3},{2,4,5,6};{1,4,5,6},{1,3}").unwrap();
        let lambda = lp("121112", 2); // ({1,3,4,5},{2,6})
        let image = op_apply(&m, &lambda).unwrap();
        assert_eq!(image, lp("211221", 2)); // ({2,3,6},{1,4,5})
        assert_eq!(m.to_string(), "{2,3},{2,4,5,6};{1,4,5,6},{1,3}");
        assert_eq!(PartitionOperator::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn identity_is_neutral() {
        let id = op_identity(2, 2);
        assert_eq!(id.column(0), &lp("11", 2));
        assert_eq!(id.column(1), &lp("22", 2));
        assert!(id.is_identity());
        for lambda in enumerate(4, 2).unwrap() {
            assert_eq!(op_apply(&op_identity(4, 2), &lambda).unwrap(), lambda);
        }
        for m in all_operators(2, 2) {
            assert_eq!(op_multiply(&op_identity(2, 2), &m).unwrap(), m);
            assert_eq!(op_multiply(&m, &op_identity(2, 2)).unwrap(), m);
        }
    }

    #[test]
    fn multiply_matches_lattice_oracle() {
        let ops = all_operators(2, 2);
        for a in &ops {
            for b in &ops {
                let prod = op_multiply(a, b).unwrap();
                assert_eq!(
                    entry_grid(&prod),
                    lattice_multiply(&entry_grid(a), &entry_grid(b))
                );
            }
        }
    }

    #[test]
    fn apply_matches_lattice_oracle() {
        for m in all_operators(2, 2) {
            for lambda in enumerate(2, 2).unwrap() {
                let image = op_apply(&m, &lambda).unwrap();
                let oracle = lattice_multiply(&entry_grid(&m), &column_grid(&lambda));
                for (i, class) in image.classes().into_iter().enumerate() {
                    assert_eq!(class, oracle[i][0]);
                }
            }
        }
    }

    #[test]
    fn multiply_associative_and_action_compatible() {
        // strided triples at n = 3
        let ops = all_operators(3, 2);
        let picks: Vec<_> = (0..ops.len()).step_by(61).collect();
        for &a in &picks {
            for &b in &picks {
                for &c in &picks {
                    let lhs =
                        op_multiply(&ops[a], &op_multiply(&ops[b], &ops[c]).unwrap()).unwrap();
                    let rhs =
                        op_multiply(&op_multiply(&ops[a], &ops[b]).unwrap(), &ops[c]).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for &a in &picks {
            for &b in &picks {
                for lambda in enumerate(3, 2).unwrap() {
                    let via_product =
                        op_apply(&op_multiply(&ops[a], &ops[b]).unwrap(), &lambda).unwrap();
                    let via_action =
                        op_apply(&ops[a], &op_apply(&ops[b], &lambda).unwrap()).unwrap();
                    assert_eq!(via_product, via_action);
                }
            }
        }
    }

    #[test]
    fn restrict_is_diagonal_product() {
        let m = PartitionOperator::parse("{2,3},{2,4,5,6};{1,4,5,6},{1,3}").unwrap();
        for level in 1..=6 {
            let restricted = op_restrict(&m, level).unwrap();
            // oracle: lattice product with diag([level]) inside [6]
            let diag: Vec<Vec<Subset>> = (0..2)
                .map(|i| {
                    (0..2)
                        .map(|j| {
                            if i == j {
                                Subset::from_elements(6, 0..level)
                            } else {
                                Subset::empty(6)
                            }
                        })
                        .collect()
                })
                .collect();
            let prod = lattice_multiply(&diag, &entry_grid(&m));
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(
                        restricted.entry(i, j).iter().collect::<Vec<_>>(),
                        prod[i][j].iter().collect::<Vec<_>>()
                    );
                }
            }
        }
        assert_eq!(op_restrict(&m, 6).unwrap(), m);
        let tower = op_restrict(&op_restrict(&m, 4).unwrap(), 2).unwrap();
        assert_eq!(tower, op_restrict(&m, 2).unwrap());
    }

    #[test]
    fn restrict_commutes_with_action() {
        for m in all_operators(3, 2) {
            for lambda in enumerate(3, 2).unwrap() {
                for level in 1..=3 {
                    let lhs = op_apply(
                        &op_restrict(&m, level).unwrap(),
                        &restrict(&lambda, level).unwrap(),
                    )
                    .unwrap();
                    let rhs = restrict(&op_apply(&m, &lambda).unwrap(), level).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn action_is_lipschitz() {
        let all: Vec<_> = enumerate(3, 2).unwrap().collect();
        for m in all_operators(3, 2) {
            for a in &all {
                for b in &all {
                    let before = distance_exponent(a, b).unwrap();
                    let after =
                        distance_exponent(&op_apply(&m, a).unwrap(), &op_apply(&m, b).unwrap())
                            .unwrap();
                    assert!(after >= before);
                }
            }
        }
    }

    #[test]
    fn coag_embedding_reproduces_coag() {
        // π = 123/45/678/9, π' = 12/34
        let pi = SetPartition::parse("123/45/678/9").unwrap();
        let pi_prime = SetPartition::parse("12/34").unwrap();
        let m = op_from_coag(&pi_prime, 9, 4).unwrap();
        let lambda = pi.to_labeled(4).unwrap();
        let image = op_apply(&m, &lambda).unwrap();
        let classes = image.classes();
        assert_eq!(classes[0], Subset::from_elements(9, 0..5));
        assert_eq!(classes[1], Subset::from_elements(9, 5..9));
        assert!(classes[2].is_empty() && classes[3].is_empty());
        assert_eq!(blocks(&image), coag(&pi, &pi_prime).unwrap());

        // singletons give the identity operator
        assert_eq!(
            op_from_coag(&SetPartition::singletons(3), 5, 3).unwrap(),
            op_identity(5, 3)
        );
        assert!(op_from_coag(&SetPartition::singletons(3), 5, 4).is_err());

        // small instances against the coag oracle
        for pi in crate::partitions::enumerate_set_partitions(6, 4).unwrap() {
            for pp in crate::partitions::enumerate_set_partitions(4, 4).unwrap() {
                let m = op_from_coag(&pp, 6, 4).unwrap();
                let lambda = pi.to_labeled(4).unwrap();
                let got = blocks(&op_apply(&m, &lambda).unwrap());
                assert_eq!(got, coag(&pi, &pp).unwrap());
            }
        }
    }

    #[test]
    fn cyclic_operator_properties() {
        let lambda = lp("12", 2);
        let m = op_cyclic(&lambda);
        assert_eq!(m.column(0), &lp("12", 2));
        assert_eq!(m.column(1), &lp("21", 2));

        for (n, k) in [(4, 2), (5, 3), (6, 4)] {
            for lambda in enumerate(n, k).unwrap() {
                let m = op_cyclic(&lambda);
                let mt = op_transpose(&m).unwrap();
                assert_eq!(op_multiply(&m, &mt).unwrap(), op_identity(n, k));
            }
        }

        // commutation M_λ λ' = M_λ' λ
        for a in enumerate(4, 3).unwrap() {
            for b in enumerate(4, 3).unwrap() {
                assert_eq!(
                    op_apply(&op_cyclic(&a), &b).unwrap(),
                    op_apply(&op_cyclic(&b), &a).unwrap()
                );
            }
        }
    }

    #[test]
    fn transpose_identity_and_involution() {
        let id = op_identity(4, 3);
        assert_eq!(op_transpose(&id).unwrap(), id);
        for lambda in enumerate(4, 3).unwrap() {
            let m = op_cyclic(&lambda);
            let mt = op_transpose(&m).unwrap();
            assert_eq!(op_transpose(&mt).unwrap(), m);
        }
        // a column repetition makes the transpose leave the space
        let m = PartitionOperator::from_columns(vec![lp("11", 2), lp("11", 2)]).unwrap();
        assert!(matches!(
            op_transpose(&m),
            Err(Error::NotPartitionOperator(_))
        ));
    }

    #[test]
    fn strong_lipschitz_detection() {
        for m in all_operators(2, 2) {
            let table = MapTable::from_operator(&m).unwrap();
            assert!(is_strongly_lipschitz(&table));
        }
        // constant maps pass: equal images overlap fully
        let target = lp("121", 2);
        let table = MapTable::from_fn(3, 2, |_| target.clone()).unwrap();
        assert!(is_strongly_lipschitz(&table));
        // copying the last label onto position 1 breaks the overlap condition
        let table = MapTable::from_fn(3, 2, |l| {
            let mut labels = l.labels().to_vec();
            labels[0] = labels[2];
            LabeledPartition::new(2, labels).unwrap()
        })
        .unwrap();
        let (a, b) = strong_lipschitz_witness(&table).expect("violation expected");
        let overlap_in = a.overlap(&b).unwrap();
        let overlap_out = table.get(&a).overlap(table.get(&b)).unwrap();
        assert!(!overlap_in.is_subset_of(&overlap_out));
        assert!(matches!(
            op_from_table(&table),
            Err(Error::NotStronglyLipschitz { .. })
        ));
    }

    #[test]
    fn table_operator_round_trip() {
        for m in all_operators(3, 2) {
            let table = MapTable::from_operator(&m).unwrap();
            let rebuilt = op_from_table(&table).unwrap();
            assert_eq!(rebuilt, m);
        }
        // strided sample at (4, 3): reconstruction reproduces the table on all 81 inputs
        let cols: Vec<_> = enumerate(4, 3).unwrap().collect();
        for i in 0..40usize {
            let m = PartitionOperator::from_columns(vec![
                cols[(i * 13) % cols.len()].clone(),
                cols[(i * 29 + 7) % cols.len()].clone(),
                cols[(i * 53 + 11) % cols.len()].clone(),
            ])
            .unwrap();
            let table = MapTable::from_operator(&m).unwrap();
            let rebuilt = op_from_table(&table).unwrap();
            for (input, output) in table.iter() {
                assert_eq!(&op_apply(&rebuilt, &input).unwrap(), output);
            }
        }
        // identity table rebuilds the identity operator
        let id = MapTable::from_fn(3, 2, |l| l.clone()).unwrap();
        assert_eq!(op_from_table(&id).unwrap(), op_identity(3, 2));
    }

    #[test]
    fn relabel_equivariance() {
        // (Mλ)^σ = M^σ λ^σ
        for m in all_operators(3, 2) {
            for lambda in enumerate(3, 2).unwrap() {
                for sigma in Permutation::all(3) {
                    let lhs = relabel(&op_apply(&m, &lambda).unwrap(), &sigma).unwrap();
                    let rhs = op_apply(
                        &op_relabel(&m, &sigma).unwrap(),
                        &relabel(&lambda, &sigma).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn lipschitz_table_sequences() {
        // tables induced by one operator at each level are compatible
        let m = PartitionOperator::parse("{2,3},{2,4,5,6};{1,4,5,6},{1,3}").unwrap();
        let tables: Vec<MapTable> = (1..=4)
            .map(|level| MapTable::from_operator(&op_restrict(&m, level).unwrap()).unwrap())
            .collect();
        assert!(is_lipschitz_tables(&tables).unwrap());

        // copying the top label onto position 1 is not Lipschitz
        let bad: Vec<MapTable> = (1..=3)
            .map(|level| {
                MapTable::from_fn(level, 2, |l| {
                    let mut labels = l.labels().to_vec();
                    labels[0] = labels[level - 1];
                    LabeledPartition::new(2, labels).unwrap()
                })
                .unwrap()
            })
            .collect();
        assert!(!is_lipschitz_tables(&bad).unwrap());
    }

    #[test]
    fn array_maps() {
        // constant array reduces to a fixed operator
        let m = PartitionOperator::parse("{2,3},{2,4,5,6};{1,4,5,6},{1,3}").unwrap();
        let entries: Vec<Vec<LabeledPartition>> = (0..2)
            .map(|i| (0..=6).map(|_| m.column(i).clone()).collect())
            .collect();
        let array = ColumnArray::new(6, 2, entries).unwrap();
        for lambda in enumerate(3, 2).unwrap() {
            let got = array_apply(&array, &lambda).unwrap();
            let want = op_apply(&op_restrict(&m, 3).unwrap(), &lambda).unwrap();
            assert_eq!(got, want);
        }

        // adversarial array at n = 2, k = 2 violating strong Lipschitz:
        // class 1's column depends on where its least element sits
        let e1 = LabeledPartition::constant(2, 2, 0);
        let e2 = LabeledPartition::constant(2, 2, 1);
        let entries = vec![
            vec![e1.clone(), e1.clone(), e2.clone()],
            vec![e1.clone(), e1.clone(), e1.clone()],
        ];
        let array = ColumnArray::new(2, 2, entries).unwrap();
        let table = MapTable::from_fn(2, 2, |l| array_apply(&array, l).unwrap()).unwrap();
        assert!(!is_strongly_lipschitz(&table));

        // the restricted image depends only on the restricted input and
        // low-index entries
        let lambda = lp("12", 2);
        let r1 = restrict(&array_apply(&array, &lambda).unwrap(), 1).unwrap();
        let direct = array_apply(&array, &restrict(&lambda, 1).unwrap()).unwrap();
        assert_eq!(r1, direct);
    }

    #[test]
    fn array_maps_are_lipschitz_tables() {
        // F_A induces a compatible Lipschitz sequence at levels 1..=3
        let cols: Vec<_> = enumerate(3, 2).unwrap().collect();
        for seed in 0..20usize {
            let entries: Vec<Vec<LabeledPartition>> = (0..2)
                .map(|i| {
                    (0..=3)
                        .map(|j| cols[(seed * 7 + i * 3 + j * 5) % cols.len()].clone())
                        .collect()
                })
                .collect();
            let array = ColumnArray::new(3, 2, entries).unwrap();
            let tables: Vec<MapTable> = (1..=3)
                .map(|level| {
                    MapTable::from_fn(level, 2, |l| array_apply(&array, l).unwrap()).unwrap()
                })
                .collect();
            assert!(is_lipschitz_tables(&tables).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn minima_rule() {
        let lambda = lp("212", 2);
        assert_eq!(ColumnArray::minima(&lambda), vec![2, 1]);
        let empty_class = lp("111", 2);
        assert_eq!(ColumnArray::minima(&empty_class), vec![1, 0]);
    }
}
