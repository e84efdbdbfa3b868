//! Brute-force enumeration of plane partitions.
//!
//! This is the independent ground truth for the product expansions in
//! [`super::table`]; it builds every array row by row, so it is only meant
//! for small sizes.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Largest size accepted by [`enumerate_plane_partitions`].
pub const ENUMERATION_CAP: usize = 12;

/// A plane partition in canonical form: rows of positive entries, weakly
/// decreasing along each row and down each column, with no empty rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// Validates `rows` and strips trailing zeros and empty rows.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|mut r| {
                while r.last() == Some(&0) {
                    r.pop();
                }
                r
            })
            .collect();
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(invalid(format!("row {i} has a zero before a positive entry")));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(invalid(format!("row {i} is not weakly decreasing")));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(x, y)| x > y) {
                    return Err(invalid(format!("row {i} exceeds the row above it")));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `|π|`, the sum of all entries.
    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().map(|&x| x as u64).sum()
    }

    /// The sum of the diagonal entries.
    pub fn trace(&self) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(i))
            .map(|&x| x as u64)
            .sum()
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every plane partition of `n`, each exactly once.
///
/// The output order is deterministic (depth-first over rows, largest entries
/// first). Sizes above [`ENUMERATION_CAP`] are refused.
pub fn enumerate_plane_partitions(n: usize) -> Result<Vec<PlanePartition>> {
    if n > ENUMERATION_CAP {
        return Err(Error::Resource(format!(
            "enumeration of size {n} exceeds the cap {ENUMERATION_CAP}"
        )));
    }
    let mut out = Vec::new();
    let mut rows = Vec::new();
    // The first row is only bounded by n in every column.
    let bound = vec![n as u32; n];
    extend(n as u32, &bound, &mut rows, &mut out);
    Ok(out)
}

fn extend(remaining: u32, above: &[u32], rows: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
    if remaining == 0 {
        out.push(PlanePartition { rows: rows.clone() });
        return;
    }
    let mut row = Vec::new();
    for_each_row(remaining, above, &mut row, &mut |r| {
        let used: u32 = r.iter().sum();
        rows.push(r.to_vec());
        extend(remaining - used, r, rows, out);
        rows.pop();
    });
}

/// Calls `visit` with every nonempty weakly decreasing row with sum at most
/// `budget`, dominated entrywise by `above`.
fn for_each_row(budget: u32, above: &[u32], row: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    let col = row.len();
    if col >= above.len() {
        return;
    }
    let cap = above[col].min(budget).min(row.last().copied().unwrap_or(u32::MAX));
    for v in (1..=cap).rev() {
        row.push(v);
        for_each_row(budget - v, above, row, visit);
        visit(row);
        row.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    fn trace_histogram(n: usize) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for p in enumerate_plane_partitions(n).unwrap() {
            *h.entry(p.trace()).or_default() += 1;
        }
        h
    }

    #[test]
    fn size_zero_is_the_empty_partition() {
        let all = enumerate_plane_partitions(0).unwrap();
        assert_eq!(all, vec![PlanePartition::empty()]);
        assert_eq!(all[0].trace(), 0);
    }

    #[test]
    fn size_four_has_thirteen() {
        let all = enumerate_plane_partitions(4).unwrap();
        assert_eq!(all.len(), 13);
        assert!(all.iter().all(|p| p.size() == 4));
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 13);
        // ζ⁴ + 2ζ³ + 6ζ² + 4ζ
        let h = trace_histogram(4);
        assert_eq!(h, BTreeMap::from([(1, 4), (2, 6), (3, 2), (4, 1)]));
    }

    #[test]
    fn size_two_traces() {
        let mut traces: Vec<u64> = enumerate_plane_partitions(2)
            .unwrap()
            .iter()
            .map(PlanePartition::trace)
            .collect();
        traces.sort();
        assert_eq!(traces, vec![1, 1, 2]);
    }

    #[test]
    fn known_counts() {
        // MacMahon numbers
        let expected = [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859, 1479];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_plane_partitions(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_plane_partitions(ENUMERATION_CAP + 1),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn output_is_valid_and_deterministic() {
        let a = enumerate_plane_partitions(7).unwrap();
        let b = enumerate_plane_partitions(7).unwrap();
        assert_eq!(a, b);
        for p in &a {
            assert_eq!(PlanePartition::new(p.rows().to_vec()).as_ref(), Ok(p));
        }
    }

    #[test]
    fn constructor_rejects_bad_arrays() {
        assert!(PlanePartition::new(vec![vec![1, 2]]).is_err());
        assert!(PlanePartition::new(vec![vec![2], vec![3]]).is_err());
        assert!(PlanePartition::new(vec![vec![2], vec![1, 1]]).is_err());
        assert!(PlanePartition::new(vec![vec![2, 0, 1]]).is_err());
        let p = PlanePartition::new(vec![vec![2, 1, 0], vec![1], vec![]]).unwrap();
        assert_eq!(p.rows(), &[vec![2, 1], vec![1]]);
        assert_eq!((p.size(), p.trace()), (4, 2));
    }
}
