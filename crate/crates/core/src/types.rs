//! Domain types shared by every stage of the solver.

use std::fmt;

use crate::distance::squared_euclidean;
use crate::error::{Error, Result};

/// `n` items with `m` real-valued features each, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    data: Vec<f64>,
    n: usize,
    m: usize,
}

impl PointSet {
    /// Builds a point set from rows, rejecting ragged or non-finite input.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map(Vec::len).ok_or(Error::EmptyPointSet)?;
        if m == 0 {
            return Err(Error::ZeroDimensions);
        }
        let mut data = Vec::with_capacity(n * m);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != m {
                return Err(Error::DimensionMismatch {
                    row,
                    expected: m,
                    found: values.len(),
                });
            }
            data.extend(values);
        }
        Self::from_flat(m, data)
    }

    /// Builds a point set from a row-major buffer of `n * m` values.
    pub fn from_flat(m: usize, data: Vec<f64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDimensions);
        }
        if data.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if !data.len().is_multiple_of(m) {
            return Err(Error::DimensionMismatch {
                row: data.len() / m,
                expected: m,
                found: data.len() % m,
            });
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteFeature {
                row: pos / m,
                col: pos % m,
            });
        }
        let n = data.len() / m;
        if n > u32::MAX as usize {
            return Err(Error::TooManyPoints(n));
        }
        Ok(Self { data, n, m })
    }

    /// Convenience constructor for one-dimensional data.
    pub fn from_line(xs: &[f64]) -> Result<Self> {
        Self::from_flat(1, xs.to_vec())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dims(&self) -> usize {
        self.m
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.m..(i + 1) * self.m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.m)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    /// Multiplies every feature by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::from_flat(self.m, self.data.iter().map(|x| x * factor).collect())
    }
}

/// Required sizes of group 1 and group 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CardinalityConstraint {
    pub c1: usize,
    pub c2: usize,
}

impl CardinalityConstraint {
    pub fn new(c1: usize, c2: usize) -> Self {
        Self { c1, c2 }
    }

    /// Equal halves; `None` when `n` is odd.
    pub fn balanced(n: usize) -> Option<Self> {
        n.is_multiple_of(2).then(|| Self::new(n / 2, n / 2))
    }

    pub fn total(&self) -> usize {
        self.c1 + self.c2
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.c2, self.c1)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.c1.checked_add(self.c2) != Some(n) {
            return Err(Error::CardinalityMismatch {
                c1: self.c1,
                c2: self.c2,
                n,
            });
        }
        Ok(())
    }
}

/// One pair of items and their squared Euclidean distance, with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceEntry {
    pub d2: f64,
    pub u: u32,
    pub v: u32,
}

impl DistanceEntry {
    pub fn new(d2: f64, u: usize, v: usize) -> Self {
        debug_assert!(u < v);
        debug_assert!(d2 >= 0.0 && d2.is_finite());
        Self {
            d2,
            u: u as u32,
            v: v as u32,
        }
    }

    /// Total order: by distance, then by pair.
    pub fn cmp_key(&self, other: &Self) -> std::cmp::Ordering {
        self.d2
            .total_cmp(&other.d2)
            .then(self.u.cmp(&other.u))
            .then(self.v.cmp(&other.v))
    }
}

/// Group label. Serialized as the literals `1` and `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Group {
    One = 1,
    Two = 2,
}

impl Group {
    pub fn label(self) -> u8 {
        self as u8
    }

    pub fn from_label(label: u8) -> Option<Self> {
        match label {
            1 => Some(Group::One),
            2 => Some(Group::Two),
            _ => None,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Group::One => Group::Two,
            Group::Two => Group::One,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A group label per item.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    groups: Vec<Group>,
}

impl Assignment {
    pub fn new(groups: Vec<Group>) -> Self {
        Self { groups }
    }

    /// Parses labels in `{1, 2}`.
    pub fn from_labels(labels: &[u8]) -> Result<Self> {
        labels
            .iter()
            .enumerate()
            .map(|(item, &l)| Group::from_label(l).ok_or(Error::InvalidLabel { item, label: l }))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// First `c1` items in group 1, the rest in group 2.
    pub fn canonical(constraint: CardinalityConstraint) -> Self {
        let groups = (0..constraint.total())
            .map(|i| {
                if i < constraint.c1 {
                    Group::One
                } else {
                    Group::Two
                }
            })
            .collect();
        Self { groups }
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn labels(&self) -> Vec<u8> {
        self.groups.iter().map(|g| g.label()).collect()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn count(&self, group: Group) -> usize {
        self.groups.iter().filter(|&&g| g == group).count()
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.groups.iter().map(|g| g.other()).collect())
    }

    pub fn respects(&self, constraint: CardinalityConstraint) -> bool {
        self.len() == constraint.total() && self.count(Group::One) == constraint.c1
    }
}

impl std::ops::Index<usize> for Assignment {
    type Output = Group;

    fn index(&self, i: usize) -> &Group {
        &self.groups[i]
    }
}

/// Minimum intra-group Euclidean distance, or `Infinite` when no group holds
/// two items.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dispersion {
    Finite(f64),
    Infinite,
}

impl Dispersion {
    /// Converts an internal squared distance into the reported value.
    pub fn from_squared(d2: f64) -> Self {
        Dispersion::Finite(d2.sqrt())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Dispersion::Infinite)
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Dispersion::Finite(d) => d,
            Dispersion::Infinite => f64::INFINITY,
        }
    }

    /// Bitwise equality on the finite value.
    pub fn bit_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Dispersion::Finite(a), Dispersion::Finite(b)) => a.to_bits() == b.to_bits(),
            (Dispersion::Infinite, Dispersion::Infinite) => true,
            _ => false,
        }
    }

    /// Decimal with 17 significant digits, or `inf`.
    pub fn to_decimal(&self) -> String {
        match *self {
            Dispersion::Infinite => "inf".to_string(),
            Dispersion::Finite(d) => format_significant(d, 17),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if s == "inf" {
            return Some(Dispersion::Infinite);
        }
        s.parse::<f64>()
            .ok()
            .filter(|d| d.is_finite() && *d >= 0.0)
            .map(Dispersion::Finite)
    }
}

impl fmt::Display for Dispersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

/// Plain (non-scientific) decimal rendering with exactly `digits` significant
/// digits, or more integer digits when the value is that large.
fn format_significant(x: f64, digits: usize) -> String {
    let sci = format!("{:.*e}", digits - 1, x.abs());
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i64 = exponent.parse().expect("exponent");
    let digit_str: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if x.is_sign_negative() && x != 0.0 {
        "-"
    } else {
        ""
    };
    // position of the decimal point within digit_str
    let point = exponent + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digit_str)
    } else if point as usize >= digit_str.len() {
        format!(
            "{}{}.0",
            digit_str,
            "0".repeat(point as usize - digit_str.len())
        )
    } else {
        let (int, frac) = digit_str.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

/// What a requested solve should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Full,
    Heap,
    /// Currently resolves to `Heap`.
    Auto,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "heap" => Ok(Variant::Heap),
            "auto" => Ok(Variant::Auto),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// Which sweep actually produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariantUsed {
    FullSort,
    HeapThenFallback,
    HeapOnly,
}

impl VariantUsed {
    pub fn as_str(&self) -> &'static str {
        match self {
            VariantUsed::FullSort => "full",
            VariantUsed::HeapThenFallback => "heap+fallback",
            VariantUsed::HeapOnly => "heap",
        }
    }
}

impl fmt::Display for VariantUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispersionResult {
    pub dispersion: Dispersion,
    pub assignment: Assignment,
    /// Distinct distance values examined by the sweep that produced the result.
    pub iterations_used: usize,
    pub variant: VariantUsed,
    pub fallback_triggered: bool,
    /// Largest number of distance entries held in memory at once.
    pub distance_entries_held: usize,
}

/// Checks the point set invariants and that `c1 + c2 = n`.
pub fn validate_instance(points: &PointSet, constraint: CardinalityConstraint) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(pos) = points.as_flat().iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFiniteFeature {
            row: pos / points.dims(),
            col: pos % points.dims(),
        });
    }
    constraint.check(points.len())
}

/// Minimum squared distance over same-group pairs; `None` when no such pair.
pub fn min_intra_group_squared(points: &PointSet, assignment: &Assignment) -> Option<f64> {
    let mut best: Option<f64> = None;
    for u in 0..points.len() {
        for v in u + 1..points.len() {
            if assignment[u] == assignment[v] {
                let d2 = squared_euclidean(points.point(u), points.point(v));
                if best.is_none_or(|b| d2 < b) {
                    best = Some(d2);
                }
            }
        }
    }
    best
}

/// Minimum Euclidean distance over all same-group pairs.
pub fn dispersion_of(points: &PointSet, assignment: &Assignment) -> Result<Dispersion> {
    if assignment.len() != points.len() {
        return Err(Error::AssignmentLength {
            expected: points.len(),
            found: assignment.len(),
        });
    }
    Ok(min_intra_group_squared(points, assignment)
        .map(Dispersion::from_squared)
        .unwrap_or(Dispersion::Infinite))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn groups(labels: &[u8]) -> Assignment {
        Assignment::from_labels(labels).unwrap()
    }

    #[test]
    fn validate_well_formed() {
        let p = PointSet::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(validate_instance(&p, CardinalityConstraint::new(2, 1)).is_ok());
    }

    #[test]
    fn validate_cardinality_mismatch() {
        let p = PointSet::from_line(&[0.0, 1.0, 3.0]).unwrap();
        let err = validate_instance(&p, CardinalityConstraint::new(2, 2)).unwrap_err();
        assert!(matches!(
            err,
            Error::CardinalityMismatch { c1: 2, c2: 2, n: 3 }
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = PointSet::new(vec![vec![0.0, 1.0], vec![0.0]]).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                row: 1,
                expected: 2,
                found: 1
            }
        ));
    }

    #[test]
    fn non_finite_rejected() {
        let err = PointSet::new(vec![vec![0.0, f64::NAN]]).unwrap_err();
        assert!(matches!(err, Error::NonFiniteFeature { row: 0, col: 1 }));
        assert!(PointSet::from_line(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn dispersion_on_line() {
        let p = PointSet::from_line(&[0.0, 1.0, 3.0]).unwrap();
        assert_eq!(
            dispersion_of(&p, &groups(&[1, 2, 1])).unwrap(),
            Dispersion::Finite(3.0)
        );
    }

    #[test]
    fn dispersion_without_pairs_is_infinite() {
        let p = PointSet::from_line(&[0.0, 1.0]).unwrap();
        assert_eq!(
            dispersion_of(&p, &groups(&[1, 2])).unwrap(),
            Dispersion::Infinite
        );
    }

    #[test]
    fn identical_points_in_one_group() {
        let p = PointSet::from_line(&[5.0, 2.0, 5.0, 9.0]).unwrap();
        assert_eq!(
            dispersion_of(&p, &groups(&[1, 2, 1, 2])).unwrap(),
            Dispersion::Finite(0.0)
        );
    }

    #[test]
    fn dispersion_length_checked() {
        let p = PointSet::from_line(&[0.0, 1.0]).unwrap();
        assert!(dispersion_of(&p, &groups(&[1])).is_err());
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(Dispersion::Finite(3.0).to_decimal(), "3.0000000000000000");
        assert_eq!(Dispersion::Finite(0.0).to_decimal(), "0.0000000000000000");
        assert_eq!(Dispersion::Infinite.to_decimal(), "inf");
        let x = 0.1 + 0.2;
        let parsed = Dispersion::parse(&Dispersion::Finite(x).to_decimal()).unwrap();
        assert!(parsed.bit_eq(&Dispersion::Finite(x)));
        let y = 12345.678901234567;
        let parsed = Dispersion::parse(&Dispersion::Finite(y).to_decimal()).unwrap();
        assert!(parsed.bit_eq(&Dispersion::Finite(y)));
    }

    #[test]
    fn canonical_assignment() {
        let a = Assignment::canonical(CardinalityConstraint::new(2, 3));
        assert_eq!(a.labels(), vec![1, 1, 2, 2, 2]);
        assert!(a.respects(CardinalityConstraint::new(2, 3)));
    }
}
