use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// An integer partition stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let positive = parts.iter().all(|&p| p > 0);
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !positive || !decreasing {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary nonnegative parts by sorting and
    /// dropping zeros.
    pub fn from_parts_sorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn fits_box(&self, max_parts: usize, max_part: u32) -> bool {
        self.len() <= max_parts && self.largest_part() <= max_part
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.largest_part())
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells `(row, col)` of the Young diagram, both 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r as u32, c)))
    }

    pub fn contains_cell(&self, row: u32, col: u32) -> bool {
        col < self.part(row as usize)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `size` with at most `max_parts` parts, each at most
/// `max_part`, in lexicographically descending order.
pub fn partitions_in_box(max_parts: usize, max_part: u32, size: usize) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        bound: u32,
        slots: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        if slots == 0 || (bound as usize) * slots < remaining {
            return;
        }
        let top = bound.min(remaining as u32);
        for first in (1..=top).rev() {
            prefix.push(first);
            rec(remaining - first as usize, first, slots - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    rec(size, max_part, max_parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 1, 1]).size(), 5);
        assert_eq!(Partition::empty().size(), 0);
    }

    #[test]
    fn box_enumeration_examples() {
        assert_eq!(partitions_in_box(2, 2, 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_in_box(4, 3, 0), vec![Partition::empty()]);
        assert_eq!(partitions_in_box(0, 0, 0), vec![Partition::empty()]);
        assert_eq!(
            partitions_in_box(7, 3, 3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert!(partitions_in_box(1, 1, 2).is_empty());
        assert!(partitions_in_box(0, 3, 1).is_empty());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
    }

    #[test]
    fn conjugate_and_cells() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).cells().count(), 3);
        assert!(p(&[2, 1]).contains_cell(1, 0));
        assert!(!p(&[2, 1]).contains_cell(1, 1));
    }
}
