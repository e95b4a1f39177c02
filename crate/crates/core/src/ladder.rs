//! Ladders of a skew-symmetric matrix, given by their upper corners.
//!
//! A ladder with upper corners `(a_1,b_1),...,(a_s,b_s)` is the union of the
//! square blocks `{(i,j) : a_k <= i,j <= b_k}`; together with a size vector
//! `t` it determines the ideal generated by the `2t_k`-pfaffians of the
//! `k`-th block.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::VarId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct UpperCorner {
    pub a: usize,
    pub b: usize,
}

impl UpperCorner {
    pub fn new(a: usize, b: usize) -> Self {
        UpperCorner { a, b }
    }

    /// Side length of the square block.
    pub fn width(self) -> usize {
        self.b + 1 - self.a
    }

    pub fn contains(self, i: usize) -> bool {
        self.a <= i && i <= self.b
    }
}

impl From<[usize; 2]> for UpperCorner {
    fn from([a, b]: [usize; 2]) -> Self {
        UpperCorner { a, b }
    }
}

impl From<UpperCorner> for [usize; 2] {
    fn from(c: UpperCorner) -> Self {
        [c.a, c.b]
    }
}

impl fmt::Display for UpperCorner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The full input of the theory: matrix size, upper corners and sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LadderSpec {
    pub n: usize,
    pub corners: Vec<UpperCorner>,
    pub t: Vec<usize>,
}

/// One failed constraint. Corner positions `k` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    EmptyMatrix,
    LengthMismatch {
        corners: usize,
        sizes: usize,
    },
    CornerOutOfRange {
        k: usize,
        a: usize,
        b: usize,
        n: usize,
    },
    CornerNotAboveDiagonal {
        k: usize,
        a: usize,
        b: usize,
    },
    RowsNotMonotone {
        k: usize,
    },
    ColumnsNotMonotone {
        k: usize,
    },
    DuplicateCorner {
        k: usize,
        other: usize,
    },
    SizeOutOfRange {
        k: usize,
        t: usize,
        max: usize,
    },
    LadderAxiom {
        detail: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyMatrix => write!(f, "matrix size n must be at least 1"),
            Violation::LengthMismatch { corners, sizes } => write!(
                f,
                "{corners} corners but {sizes} sizes; t needs one entry per corner"
            ),
            Violation::CornerOutOfRange { k, a, b, n } => {
                write!(f, "corner {k} ({a},{b}) outside 1..={n}")
            }
            Violation::CornerNotAboveDiagonal { k, a, b } => {
                write!(f, "corner {k} ({a},{b}) violates a_k<b_k")
            }
            Violation::RowsNotMonotone { k } => {
                write!(f, "corner {k}: rows must satisfy a_{{k-1}} <= a_k")
            }
            Violation::ColumnsNotMonotone { k } => {
                write!(f, "corner {k}: columns must satisfy b_{{k-1}} <= b_k")
            }
            Violation::DuplicateCorner { k, other } => {
                write!(f, "corner {k} coincides with corner {other}")
            }
            Violation::SizeOutOfRange { k, t, max } => {
                write!(f, "size t_{k}={t} outside 1..={max}")
            }
            Violation::LadderAxiom { detail } => write!(f, "ladder axiom violated: {detail}"),
        }
    }
}

impl LadderSpec {
    pub fn new(n: usize, corners: &[(usize, usize)], t: &[usize]) -> Self {
        LadderSpec {
            n,
            corners: corners
                .iter()
                .map(|&(a, b)| UpperCorner::new(a, b))
                .collect(),
            t: t.to_vec(),
        }
    }

    /// Parses the JSON form `{"n": .., "corners": [[a,b],..], "t": [..]}`.
    /// Does not validate.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    /// A spec with no corners; its ideal is zero.
    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.t.iter().all(|&t| t == 1)
    }

    pub fn size_sum(&self) -> usize {
        self.t.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        validate(self)
    }
}

impl fmt::Display for LadderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let corners: Vec<String> = self.corners.iter().map(|c| c.to_string()).collect();
        let t: Vec<String> = self.t.iter().map(|t| t.to_string()).collect();
        write!(
            f,
            "n={} corners={{{}}} t=({})",
            self.n,
            corners.join(","),
            t.join(",")
        )
    }
}

/// Checks bounds, monotonicity, distinctness and sizes, then rebuilds the
/// cell set and checks the ladder axioms on it.
pub fn validate(spec: &LadderSpec) -> Result<()> {
    let violations = violations(spec);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidSpec(violations))
    }
}

pub fn violations(spec: &LadderSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = spec.n;
    if n == 0 {
        out.push(Violation::EmptyMatrix);
    }
    if spec.corners.len() != spec.t.len() {
        out.push(Violation::LengthMismatch {
            corners: spec.corners.len(),
            sizes: spec.t.len(),
        });
    }
    for (idx, c) in spec.corners.iter().enumerate() {
        let k = idx + 1;
        if c.a == 0 || c.b == 0 || c.a > n || c.b > n {
            out.push(Violation::CornerOutOfRange {
                k,
                a: c.a,
                b: c.b,
                n,
            });
        }
        if c.a >= c.b {
            out.push(Violation::CornerNotAboveDiagonal { k, a: c.a, b: c.b });
        }
        if idx > 0 {
            let prev = spec.corners[idx - 1];
            if prev.a > c.a {
                out.push(Violation::RowsNotMonotone { k });
            }
            if prev.b > c.b {
                out.push(Violation::ColumnsNotMonotone { k });
            }
        }
        if let Some(j) = spec.corners[..idx].iter().position(|d| d == c) {
            out.push(Violation::DuplicateCorner { k, other: j + 1 });
        }
    }
    let max = n / 2;
    for (idx, &t) in spec.t.iter().enumerate() {
        if t == 0 || t > max {
            out.push(Violation::SizeOutOfRange { k: idx + 1, t, max });
        }
    }
    if out.is_empty() {
        if let Err(detail) = check_ladder_axioms(&block_cells(spec), n) {
            out.push(Violation::LadderAxiom { detail });
        }
    }
    out
}

/// All positions `(i,j)`, including the diagonal and both triangles,
/// covered by some block.
fn block_cells(spec: &LadderSpec) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for c in &spec.corners {
        for i in c.a..=c.b {
            for j in c.a..=c.b {
                s.insert((i, j));
            }
        }
    }
    s
}

/// Ladder axioms on a set of matrix positions:
/// (1) `(i,j)` in the set implies `(j,i)` in the set;
/// (2) for `(i,j)`, `(h,k)` in the set with `i<h` and `j>k`, also `(i,k)`
/// and `(h,j)`; when both cells lie above the diagonal, also `(i,h)` and
/// `(j,k)`.
pub fn check_ladder_axioms(
    cells: &BTreeSet<(usize, usize)>,
    n: usize,
) -> std::result::Result<(), String> {
    for &(i, j) in cells {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(format!("cell ({i},{j}) outside the matrix"));
        }
        if !cells.contains(&(j, i)) {
            return Err(format!("({i},{j}) present but ({j},{i}) missing"));
        }
    }
    for &(i, j) in cells {
        for &(h, k) in cells.range((i + 1, 0)..) {
            if j <= k {
                continue;
            }
            let mut required = vec![(i, k), (h, j)];
            if i < j && h < k {
                required.push((i, h));
                required.push((j, k));
            }
            if let Some(miss) = required.iter().find(|c| !cells.contains(c)) {
                return Err(format!(
                    "({i},{j}) and ({h},{k}) present but {miss:?} missing"
                ));
            }
        }
    }
    Ok(())
}

/// Upper-triangle cells `(i,j)`, `i<j`, of a ladder; one per variable of
/// the ladder's polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellSet {
    cells: BTreeSet<(usize, usize)>,
}

impl CellSet {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.cells.contains(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    /// Variables of the ladder ring, in precedence order.
    pub fn variables(&self) -> Vec<VarId> {
        self.cells
            .iter()
            .map(|&(i, j)| VarId::new(i, j).expect("cells have i<j"))
            .collect()
    }

    /// Symmetric closure with the diagonal of each occupied row.
    pub fn symmetric_closure(&self) -> BTreeSet<(usize, usize)> {
        let mut s = BTreeSet::new();
        for &(i, j) in &self.cells {
            s.insert((i, j));
            s.insert((j, i));
            s.insert((i, i));
            s.insert((j, j));
        }
        s
    }
}

pub fn cells(spec: &LadderSpec) -> CellSet {
    let mut cells = BTreeSet::new();
    for c in &spec.corners {
        for i in c.a..=c.b {
            for j in i + 1..=c.b {
                cells.insert((i, j));
            }
        }
    }
    CellSet { cells }
}

/// Reports the first inequality that fails among
/// `2t_k <= b_k-a_k+1`, `a_k-a_{k-1} > t_{k-1}-t_k` and
/// `b_k-b_{k-1} > t_k-t_{k-1}`.
pub fn normalization_issue(spec: &LadderSpec) -> Option<String> {
    for (k, (c, &t)) in spec.corners.iter().zip(&spec.t).enumerate() {
        if 2 * t > c.width() {
            return Some(format!("corner {}: 2t_k > b_k-a_k+1", k + 1));
        }
    }
    for k in 1..spec.corners.len() {
        let (p, c) = (spec.corners[k - 1], spec.corners[k]);
        let (tp, tc) = (spec.t[k - 1] as i64, spec.t[k] as i64);
        if (c.a as i64 - p.a as i64) <= tp - tc {
            return Some(format!(
                "corners {},{}: a_k-a_{{k-1}} <= t_{{k-1}}-t_k",
                k,
                k + 1
            ));
        }
        if (c.b as i64 - p.b as i64) <= tc - tp {
            return Some(format!(
                "corners {},{}: b_k-b_{{k-1}} <= t_k-t_{{k-1}}",
                k,
                k + 1
            ));
        }
    }
    None
}

pub fn is_normalized(spec: &LadderSpec) -> bool {
    normalization_issue(spec).is_none()
}

/// Removes blocks that do not contribute to the ideal, until every
/// inequality of [`normalization_issue`] holds.
///
/// Each pass first drops every block too small for its pfaffians, then
/// handles the leftmost adjacent pair where one block's ideal contains the
/// other's. The result generates the same ideal; it may be empty.
pub fn normalize(spec: &LadderSpec) -> LadderSpec {
    let mut corners = spec.corners.clone();
    let mut t = spec.t.clone();
    loop {
        let before = corners.len();
        let keep: Vec<bool> = corners
            .iter()
            .zip(&t)
            .map(|(c, &tk)| 2 * tk <= c.width())
            .collect();
        let mut it = keep.iter();
        corners.retain(|_| *it.next().unwrap());
        let mut it = keep.iter();
        t.retain(|_| *it.next().unwrap());
        if corners.len() != before {
            continue;
        }

        let mut drop = None;
        for k in 1..corners.len() {
            let (p, c) = (corners[k - 1], corners[k]);
            let (tp, tc) = (t[k - 1] as i64, t[k] as i64);
            if p == c {
                // identical blocks: the smaller size gives the larger ideal
                drop = Some(if tp <= tc { k } else { k - 1 });
                break;
            }
            let prev_inside = (c.a as i64 - p.a as i64) <= tp - tc;
            let cur_inside = (c.b as i64 - p.b as i64) <= tc - tp;
            match (prev_inside, cur_inside) {
                (false, false) => continue,
                (true, false) => drop = Some(k - 1),
                (false, true) => drop = Some(k),
                // both containments: equal ideals, drop the larger size
                (true, true) => drop = Some(if tp > tc { k - 1 } else { k }),
            }
            break;
        }
        match drop {
            Some(k) => {
                corners.remove(k);
                t.remove(k);
            }
            None => break,
        }
    }
    LadderSpec {
        n: spec.n,
        corners,
        t,
    }
}

/// The ladder with upper corners `(a_k+t_k-1, b_k-t_k+1)` and all sizes 1;
/// its upper cells count the codimension.
pub fn corner_ladder(spec: &LadderSpec) -> Result<LadderSpec> {
    if let Some(issue) = normalization_issue(spec) {
        return Err(Error::NotNormalized(issue));
    }
    let corners: Vec<UpperCorner> = spec
        .corners
        .iter()
        .zip(&spec.t)
        .map(|(c, &t)| UpperCorner::new(c.a + t - 1, c.b + 1 - t))
        .collect();
    for (k, c) in corners.iter().enumerate() {
        if c.a >= c.b {
            return Err(Error::Invariant(format!(
                "corner-ladder corner {} {c} is degenerate",
                k + 1
            )));
        }
        if k > 0 && (corners[k - 1].a >= c.a || corners[k - 1].b >= c.b) {
            return Err(Error::Invariant(format!(
                "corner-ladder corners {} and {} not strictly increasing",
                k,
                k + 1
            )));
        }
    }
    Ok(LadderSpec {
        n: spec.n,
        t: vec![1; corners.len()],
        corners,
    })
}

/// Codimension of the ladder's pfaffian ideal by counting the upper cells
/// of the corner ladder of the normalized spec.
pub fn height_formula(spec: &LadderSpec) -> usize {
    let normalized = normalize(spec);
    let l = corner_ladder(&normalized).expect("normalized spec has a corner ladder");
    cells(&l).len()
}
