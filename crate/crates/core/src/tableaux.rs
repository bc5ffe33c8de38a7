//! Signed tableaux, antitableaux, and the skew-column normalization that
//! decides whether a cohomological induction vanishes.
//!
//! A [`ColumnStack`] is the tableau `S = S_1 ⊔ ... ⊔ S_r` built block by
//! block from a θ-stable datum. [`trapa_normalize`] rewrites adjacent skew
//! columns until the blocks are sorted, and either reports the formal zero
//! tableau or returns the pair `(Ann, AS)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohind::ThetaData;
use crate::error::{Error, Result};
use crate::halfint::{HalfInt, HalfIntMultiset, Segment};
use crate::weights::GroupSignature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One box of the tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub sign: Sign,
    pub entry: HalfInt,
}

/// The tableau split into skew columns; each block lists its boxes from top
/// to bottom, and the entries read down a block form a decreasing segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnStack {
    pub sig: GroupSignature,
    pub blocks: Vec<Vec<Cell>>,
}

impl ColumnStack {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The entries of block `i` as a segment.
    pub fn segment(&self, i: usize) -> Result<Segment> {
        let m: HalfIntMultiset = self.blocks[i].iter().map(|c| c.entry).collect();
        m.as_segment().ok_or_else(|| {
            Error::Inconsistency(format!("block {} holds {m}, which is not a segment", i + 1))
        })
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.blocks.iter().flatten()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = Vec::new();
        for c in self.cells() {
            if lens.len() <= c.row {
                lens.resize(c.row + 1, 0);
            }
            lens[c.row] = lens[c.row].max(c.col + 1);
        }
        lens
    }

    /// The boxes laid out row by row.
    pub fn grid(&self) -> Vec<Vec<Cell>> {
        let mut rows: Vec<Vec<Cell>> = self.row_lengths().iter().map(|&n| Vec::with_capacity(n)).collect();
        let mut all: Vec<&Cell> = self.cells().collect();
        all.sort_by_key(|c| (c.row, c.col));
        for c in all {
            rows[c.row].push(*c);
        }
        rows
    }

    pub fn signed_tableau(&self) -> SignedTableau {
        SignedTableau::from_sign_rows(
            self.grid()
                .iter()
                .map(|row| row.iter().map(|c| c.sign).collect())
                .collect(),
        )
    }

    pub fn anti_tableau(&self) -> AntiTableau {
        AntiTableau::from_rows(
            self.grid()
                .iter()
                .map(|row| row.iter().map(|c| c.entry).collect())
                .collect(),
        )
    }
}

impl ColumnStack {
    /// One line per row, each box as `[<entry><sign>]`.
    pub fn render_ascii(&self) -> String {
        self.grid()
            .iter()
            .map(|row| row.iter().map(|c| format!("[{}{}]", c.entry, c.sign)).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for SignedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.signs().map(|s| format!("[{s}]")).collect())
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl fmt::Display for AntiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| format!("[{x}]")).collect())
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

/// A row of a signed tableau: its length and first sign; the signs
/// alternate along the row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedRow {
    pub len: usize,
    pub first: Sign,
}

impl SignedRow {
    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len).map(move |k| if k % 2 == 0 { self.first } else { self.first.flip() })
    }
}

/// A `(p,q)`-signed tableau up to interchanging rows of equal length.
/// Rows are kept longest first, `+` before `-` among equal lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedTableau {
    rows: Vec<SignedRow>,
}

impl SignedTableau {
    pub fn new(mut rows: Vec<SignedRow>) -> Self {
        rows.retain(|r| r.len > 0);
        rows.sort_by(|a, b| b.len.cmp(&a.len).then(a.first.cmp(&b.first)));
        SignedTableau { rows }
    }

    /// Build from explicit sign rows. Panics on a row whose signs do not
    /// alternate; callers construct rows by alternation.
    pub fn from_sign_rows(rows: Vec<Vec<Sign>>) -> Self {
        SignedTableau::new(
            rows.into_iter()
                .filter(|r| !r.is_empty())
                .map(|r| {
                    assert!(r.windows(2).all(|w| w[0] != w[1]), "signs must alternate");
                    SignedRow {
                        len: r.len(),
                        first: r[0],
                    }
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> &[SignedRow] {
        &self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len)
    }

    pub fn signature(&self) -> (usize, usize) {
        let mut plus = 0;
        let mut minus = 0;
        for r in &self.rows {
            for s in r.signs() {
                match s {
                    Sign::Plus => plus += 1,
                    Sign::Minus => minus += 1,
                }
            }
        }
        (plus, minus)
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len).collect()
    }
}

/// A filling of a Young diagram whose entries strictly decrease down each
/// column and weakly decrease along each row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AntiTableau {
    columns: Vec<Vec<HalfInt>>,
}

impl AntiTableau {
    pub fn from_rows(rows: Vec<Vec<HalfInt>>) -> Self {
        let width = rows.first().map_or(0, |r| r.len());
        let columns = (0..width)
            .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        AntiTableau { columns }
    }

    pub fn from_columns(columns: Vec<Vec<HalfInt>>) -> Self {
        AntiTableau { columns }
    }

    pub fn columns(&self) -> &[Vec<HalfInt>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<HalfInt>> {
        let height = self.columns.first().map_or(0, |c| c.len());
        (0..height)
            .map(|r| {
                self.columns
                    .iter()
                    .take_while(|c| c.len() > r)
                    .map(|c| c[r])
                    .collect()
            })
            .collect()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows().iter().map(|r| r.len()).collect()
    }

    pub fn entries(&self) -> HalfIntMultiset {
        self.columns.iter().flatten().copied().collect()
    }

    /// Column lengths weakly decrease, columns strictly decrease, rows
    /// weakly decrease.
    pub fn is_antitableau(&self) -> bool {
        let shape_ok = self.columns.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self
            .columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] > w[1]));
        let rows_ok = self.rows().iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]));
        shape_ok && cols_ok && rows_ok
    }
}

/// The outcome of [`trapa_normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormalizeOutcome {
    Zero,
    NonZero {
        stack: ColumnStack,
        ann: AntiTableau,
        as_tab: SignedTableau,
    },
}

impl NormalizeOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, NormalizeOutcome::Zero)
    }

    pub fn invariants(&self) -> Option<(AntiTableau, SignedTableau)> {
        match self {
            NormalizeOutcome::Zero => None,
            NormalizeOutcome::NonZero { ann, as_tab, .. } => Some((ann.clone(), as_tab.clone())),
        }
    }
}

/// Build the initial tableau for `d` with block entries `segments`.
///
/// Stage `k` scans the existing rows from the top and appends a box to each
/// row end whose forced sign (opposite to the last sign) still has budget;
/// remaining boxes open new rows, pluses first. Rows of equal length may be
/// interchanged, so the rows are then re-sorted longest first.
pub fn build_initial(d: &ThetaData, segments: &[Segment]) -> Result<ColumnStack> {
    if segments.len() != d.len() {
        return Err(Error::InvalidInput(format!(
            "{} blocks but {} segments",
            d.len(),
            segments.len()
        )));
    }
    for (k, (&(p, q), s)) in d.blocks().iter().zip(segments).enumerate() {
        if p + q == 0 {
            return Err(Error::InvalidInput(format!("block {} is empty", k + 1)));
        }
        if s.len() != p + q {
            return Err(Error::InvalidInput(format!(
                "block {} has size {} but segment {s} has length {}",
                k + 1,
                p + q,
                s.len()
            )));
        }
    }

    // Each row is a list of (sign, block index).
    let mut rows: Vec<Vec<(Sign, usize)>> = Vec::new();
    for (k, &(p, q)) in d.blocks().iter().enumerate() {
        let (mut plus, mut minus) = (p, q);
        for row in rows.iter_mut() {
            let forced = row.last().expect("rows are nonempty").0.flip();
            let budget = match forced {
                Sign::Plus => &mut plus,
                Sign::Minus => &mut minus,
            };
            if *budget > 0 {
                *budget -= 1;
                row.push((forced, k));
            }
        }
        rows.extend(std::iter::repeat_with(|| vec![(Sign::Plus, k)]).take(plus));
        rows.extend(std::iter::repeat_with(|| vec![(Sign::Minus, k)]).take(minus));
        rows.sort_by_key(|r| std::cmp::Reverse(r.len()));
    }

    let mut blocks: Vec<Vec<Cell>> = vec![Vec::new(); d.len()];
    for (r, row) in rows.iter().enumerate() {
        for (c, &(sign, k)) in row.iter().enumerate() {
            blocks[k].push(Cell {
                row: r,
                col: c,
                sign,
                entry: HalfInt::ZERO,
            });
        }
    }
    for (cells, seg) in blocks.iter_mut().zip(segments) {
        cells.sort_by_key(|c| c.row);
        for (cell, v) in cells.iter_mut().zip(seg.values_desc()) {
            cell.entry = v;
        }
    }
    Ok(ColumnStack {
        sig: d.sig(),
        blocks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapSing {
    pub overlap: usize,
    pub sing: usize,
}

/// `overlap(S_i, S_{i+1})` and `sing(S_i, S_{i+1})` for 0-based `i`.
pub fn overlap_and_sing(stack: &ColumnStack, i: usize) -> Result<OverlapSing> {
    if i + 1 >= stack.num_blocks() {
        return Err(Error::InvalidInput(format!(
            "no block pair at index {i} in a stack of {} blocks",
            stack.num_blocks()
        )));
    }
    let (upper, lower) = (&stack.blocks[i], &stack.blocks[i + 1]);
    let sing = stack
        .segment(i)?
        .intersect(&stack.segment(i + 1)?)
        .len();
    Ok(OverlapSing {
        overlap: overlap_of(upper, lower),
        sing,
    })
}

fn overlap_of(left: &[Cell], right: &[Cell]) -> usize {
    let a = left.len();
    (1..=a.min(right.len()))
        .rev()
        .find(|&m| (0..m).all(|k| left[a - m + k].col < right[k].col))
        .unwrap_or(0)
}

fn sorted_pair(upper: &Segment, lower: &Segment) -> bool {
    upper.start() >= lower.start() && upper.end() >= lower.end()
}

type Filling = BTreeMap<(usize, usize), HalfInt>;

fn fill(cells: &[Cell], seg: &Segment, out: &mut Filling) {
    for (c, v) in cells.iter().zip(seg.values_desc()) {
        out.insert((c.row, c.col), v);
    }
}

fn cells_with(f: &Filling, v: HalfInt) -> Vec<(usize, usize)> {
    f.iter().filter(|(_, &e)| e == v).map(|(&pos, _)| pos).collect()
}

fn unique_with(f: &Filling, v: HalfInt) -> Result<(usize, usize)> {
    match cells_with(f, v).as_slice() {
        [only] => Ok(*only),
        other => Err(Error::Inconsistency(format!(
            "expected a unique box holding {v}, found {}",
            other.len()
        ))),
    }
}

/// `ν_{i+1} ⊂ ν_i`: descend `ν_{i+1}` by one, recurse, then raise one box
/// per entry of `ν_{i+1}`, from the largest down.
fn descend_and_bump(upper: &[Cell], nu_u: Segment, lower: &[Cell], nu_l: Segment) -> Result<Filling> {
    if nu_l.start() <= nu_u.start() {
        let mut f = Filling::new();
        fill(upper, &nu_u, &mut f);
        fill(lower, &nu_l, &mut f);
        return Ok(f);
    }
    let mut f = descend_and_bump(upper, nu_u, lower, nu_l.shifted(-1))?;
    for v in nu_l.values_desc() {
        let (_, vcol) = unique_with(&f, v)?;
        let below = cells_with(&f, v - 1);
        let right: Vec<_> = below.iter().filter(|&&(_, c)| c > vcol).copied().collect();
        if right.len() > 1 {
            return Err(Error::Inconsistency(format!(
                "{} boxes hold {} to the right of {v}",
                right.len(),
                v - 1
            )));
        }
        let target = match right.first() {
            Some(&pos) => pos,
            None => *below
                .iter()
                .min_by_key(|&&(r, c)| (c, std::cmp::Reverse(r)))
                .ok_or_else(|| Error::Inconsistency(format!("no box holds {}", v - 1)))?,
        };
        f.insert(target, v);
    }
    Ok(f)
}

/// `ν_i ⊂ ν_{i+1}`: ascend `ν_i` by one, recurse, then lower one box per
/// entry of `ν_i`, from the smallest up.
fn ascend_and_bump(upper: &[Cell], nu_u: Segment, lower: &[Cell], nu_l: Segment) -> Result<Filling> {
    if nu_u.end() >= nu_l.end() {
        let mut f = Filling::new();
        fill(upper, &nu_u, &mut f);
        fill(lower, &nu_l, &mut f);
        return Ok(f);
    }
    let mut f = ascend_and_bump(upper, nu_u.shifted(1), lower, nu_l)?;
    let ascending: Vec<HalfInt> = nu_u.values_desc().collect::<Vec<_>>().into_iter().rev().collect();
    for v in ascending {
        let (_, vcol) = unique_with(&f, v)?;
        let above = cells_with(&f, v + 1);
        let left: Vec<_> = above.iter().filter(|&&(_, c)| c < vcol).copied().collect();
        if left.len() > 1 {
            return Err(Error::Inconsistency(format!(
                "{} boxes hold {} to the left of {v}",
                left.len(),
                v + 1
            )));
        }
        let target = match left.first() {
            Some(&pos) => pos,
            None => *above
                .iter()
                .max_by_key(|&&(r, c)| (c, std::cmp::Reverse(r)))
                .ok_or_else(|| Error::Inconsistency(format!("no box holds {}", v + 1)))?,
        };
        f.insert(target, v);
    }
    Ok(f)
}

/// Split a rewritten pair: the lower block takes the right-most box of each
/// value from `min(bottoms)` up to `min(tops)`.
fn repartition(
    upper: &[Cell],
    lower: &[Cell],
    f: &Filling,
    nu_u: &Segment,
    nu_l: &Segment,
) -> Result<(Vec<Cell>, Vec<Cell>)> {
    let lo = nu_u.start().min(nu_l.start());
    let hi = nu_u.end().min(nu_l.end());
    let mut all: BTreeMap<(usize, usize), Cell> = BTreeMap::new();
    for c in upper.iter().chain(lower) {
        all.insert((c.row, c.col), Cell { entry: f[&(c.row, c.col)], ..*c });
    }
    let mut new_lower = Vec::new();
    let mut v = lo;
    while v <= hi {
        let pos = all
            .values()
            .filter(|c| c.entry == v)
            .max_by_key(|c| (c.col, std::cmp::Reverse(c.row)))
            .map(|c| (c.row, c.col))
            .ok_or_else(|| Error::Inconsistency(format!("repartition found no box holding {v}")))?;
        new_lower.push(all.remove(&pos).unwrap());
        v += 1;
    }
    let mut new_upper: Vec<Cell> = all.into_values().collect();
    for block in [&mut new_upper, &mut new_lower] {
        block.sort_by_key(|c| c.row);
        if !block.windows(2).all(|w| w[0].row < w[1].row && w[0].entry == w[1].entry + 1) {
            return Err(Error::Inconsistency(
                "repartition produced a block that is not a skew column of a segment".into(),
            ));
        }
    }
    Ok((new_upper, new_lower))
}

/// Run the adjacent-pair rewriting to a fixpoint and apply the final
/// nonvanishing test.
///
/// Pairs are visited left to right; a sweep that changes nothing ends the
/// loop. More than `N^2` changing sweeps is reported as
/// [`Error::IterationCap`].
pub fn trapa_normalize(stack: &ColumnStack) -> Result<NormalizeOutcome> {
    let mut st = stack.clone();
    let r = st.num_blocks();
    let cap = st.sig.n() * st.sig.n();
    let mut sweeps = 0;
    loop {
        let mut changed = false;
        for i in 0..r.saturating_sub(1) {
            let OverlapSing { overlap, sing } = overlap_and_sing(&st, i)?;
            if overlap < sing {
                return Ok(NormalizeOutcome::Zero);
            }
            let (nu_u, nu_l) = (st.segment(i)?, st.segment(i + 1)?);
            if sorted_pair(&nu_u, &nu_l) || overlap > sing {
                continue;
            }
            let f = if nu_l.is_subset_of(&nu_u) {
                descend_and_bump(&st.blocks[i], nu_u, &st.blocks[i + 1], nu_l)?
            } else if nu_u.is_subset_of(&nu_l) {
                ascend_and_bump(&st.blocks[i], nu_u, &st.blocks[i + 1], nu_l)?
            } else {
                continue;
            };
            let (u, l) = repartition(&st.blocks[i], &st.blocks[i + 1], &f, &nu_u, &nu_l)?;
            st.blocks[i] = u;
            st.blocks[i + 1] = l;
            changed = true;
        }
        if !changed {
            break;
        }
        sweeps += 1;
        if sweeps > cap {
            return Err(Error::IterationCap(cap));
        }
    }

    for i in 0..r.saturating_sub(1) {
        let OverlapSing { overlap, sing } = overlap_and_sing(&st, i)?;
        if !sorted_pair(&st.segment(i)?, &st.segment(i + 1)?) || overlap < sing {
            return Ok(NormalizeOutcome::Zero);
        }
    }

    let ann = st.anti_tableau();
    if !ann.is_antitableau() {
        return Err(Error::Inconsistency(format!(
            "normalized tableau is not an antitableau: {:?}",
            ann.rows()
        )));
    }
    let as_tab = st.signed_tableau();
    Ok(NormalizeOutcome::NonZero {
        stack: st,
        ann,
        as_tab,
    })
}

/// Equality of Barbasch–Vogan invariant pairs.
pub fn as_pair_equal(
    a: &(AntiTableau, SignedTableau),
    b: &(AntiTableau, SignedTableau),
) -> Result<bool> {
    let (sa, sb) = (a.1.signature(), b.1.signature());
    if sa != sb {
        return Err(Error::SignatureMismatch {
            expected_p: sa.0,
            expected_q: sa.1,
            got_p: sb.0,
            got_q: sb.1,
        });
    }
    Ok(a.0 == b.0 && a.1 == b.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn seg(bottom_twice: i64, top_twice: i64) -> Segment {
        Segment::from_bounds(h(bottom_twice), h(top_twice))
    }

    fn theta(blocks: &[(usize, usize)]) -> ThetaData {
        ThetaData::new(blocks.to_vec()).unwrap()
    }

    fn entries_by_col(stack: &ColumnStack) -> Vec<Vec<HalfInt>> {
        stack.anti_tableau().columns().to_vec()
    }

    #[test]
    fn build_initial_examples() {
        let s = build_initial(&theta(&[(1, 1)]), &[seg(-1, 1)]).unwrap();
        assert_eq!(entries_by_col(&s), vec![vec![h(1), h(-1)]]);
        assert_eq!(
            s.signed_tableau().rows(),
            &[
                SignedRow { len: 1, first: Sign::Plus },
                SignedRow { len: 1, first: Sign::Minus }
            ]
        );

        let s = build_initial(&theta(&[(1, 0), (0, 1)]), &[seg(1, 1), seg(1, 1)]).unwrap();
        assert_eq!(s.grid().len(), 1);
        assert_eq!(s.anti_tableau().rows(), vec![vec![h(1), h(1)]]);
        assert_eq!(
            s.signed_tableau().rows(),
            &[SignedRow { len: 2, first: Sign::Plus }]
        );

        let s = build_initial(&theta(&[(1, 1), (0, 1)]), &[seg(0, 2), seg(-2, -2)]).unwrap();
        assert_eq!(entries_by_col(&s), vec![vec![h(2), h(0)], vec![h(-2)]]);
        assert_eq!(
            s.signed_tableau().rows(),
            &[
                SignedRow { len: 2, first: Sign::Plus },
                SignedRow { len: 1, first: Sign::Minus }
            ]
        );

        assert!(build_initial(&theta(&[(1, 1)]), &[seg(1, 1)]).is_err());
    }

    #[test]
    fn overlap_examples() {
        let s = build_initial(&theta(&[(1, 0), (0, 1)]), &[seg(1, 1), seg(1, 1)]).unwrap();
        assert_eq!(overlap_and_sing(&s, 0).unwrap(), OverlapSing { overlap: 1, sing: 1 });

        let s = build_initial(&theta(&[(1, 0), (1, 0)]), &[seg(1, 1), seg(1, 1)]).unwrap();
        assert_eq!(overlap_and_sing(&s, 0).unwrap(), OverlapSing { overlap: 0, sing: 1 });

        let s = build_initial(&theta(&[(1, 0), (0, 1)]), &[seg(3, 3), seg(-1, -1)]).unwrap();
        assert_eq!(overlap_and_sing(&s, 0).unwrap().sing, 0);
    }

    #[test]
    fn normalize_examples() {
        let s = build_initial(&theta(&[(1, 0), (0, 1)]), &[seg(1, 1), seg(1, 1)]).unwrap();
        let NormalizeOutcome::NonZero { ann, as_tab, .. } = trapa_normalize(&s).unwrap() else {
            panic!("expected nonzero")
        };
        assert_eq!(ann.rows(), vec![vec![h(1), h(1)]]);
        assert_eq!(as_tab.rows(), &[SignedRow { len: 2, first: Sign::Plus }]);

        let s = build_initial(&theta(&[(1, 0), (1, 0)]), &[seg(1, 1), seg(1, 1)]).unwrap();
        assert!(trapa_normalize(&s).unwrap().is_zero());

        let s = build_initial(&theta(&[(1, 1)]), &[seg(-1, 1)]).unwrap();
        let (ann, as_tab) = trapa_normalize(&s).unwrap().invariants().unwrap();
        assert_eq!(ann.columns(), &[vec![h(1), h(-1)]]);
        assert_eq!(as_tab.shape(), vec![1, 1]);
    }

    #[test]
    fn pair_equality() {
        let ann = AntiTableau::from_rows(vec![vec![h(1), h(-1)], vec![h(-3)]]);
        let row = |len, first| SignedRow { len, first };
        let t1 = SignedTableau::new(vec![row(2, Sign::Plus), row(1, Sign::Minus)]);
        let t2 = SignedTableau::new(vec![row(1, Sign::Minus), row(2, Sign::Plus)]);
        assert!(as_pair_equal(&(ann.clone(), t1.clone()), &(ann.clone(), t2)).unwrap());

        let other = AntiTableau::from_rows(vec![vec![h(1), h(-1)], vec![h(-5)]]);
        assert!(!as_pair_equal(&(ann.clone(), t1.clone()), &(other, t1.clone())).unwrap());

        let t3 = SignedTableau::new(vec![row(2, Sign::Plus), row(1, Sign::Plus)]);
        assert!(as_pair_equal(&(ann.clone(), t1), &(ann, t3)).is_err());
    }

    /// Every two-block datum of `U(p,q)` with `p + q <= max_n` and block
    /// values in a window, kept when in the mediocre range.
    #[test]
    fn two_block_nonvanishing_small() {
        for desc in crate::oracle::two_block_descriptors(4, 3) {
            let b = desc.d().blocks();
            let (p1, q1) = b[0];
            let (p2, q2) = b[1];
            let segs = desc.segments();
            let sing = segs[0].intersect(&segs[1]).len();
            let predicted = p1.min(q2) + q1.min(p2) >= sing;
            let stack = build_initial(desc.d(), segs).unwrap();
            let got = !trapa_normalize(&stack).unwrap().is_zero();
            assert_eq!(got, predicted, "{desc:?}");
        }
    }

    #[test]
    fn initial_tableau_counts_signs() {
        for desc in crate::oracle::two_block_descriptors(5, 1) {
            let stack = build_initial(desc.d(), desc.segments()).unwrap();
            let t = stack.signed_tableau();
            assert_eq!(t.signature(), (desc.d().sig().p, desc.d().sig().q));
            let lens = stack.row_lengths();
            assert!(lens.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
