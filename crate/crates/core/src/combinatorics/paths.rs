use super::{PathTuple, RegionSpec};
use crate::error::{Error, Result};

type Visit<'a> = dyn FnMut(&[Vec<(i64, i64)>]) -> bool + 'a;

struct Search {
    starts: Vec<(i64, i64)>,
    ends: Vec<(i64, i64)>,
    cols: i64,
    used: Vec<bool>,
    trail: Vec<Vec<(i64, i64)>>,
}

impl Search {
    fn new(starts: Vec<(i64, i64)>, ends: Vec<(i64, i64)>) -> Self {
        let cols = starts.iter().map(|p| p.0).max().unwrap_or(0) + 1;
        let rows = ends.iter().map(|p| p.1).max().unwrap_or(0).max(0) + 1;
        Search {
            used: vec![false; (cols * rows) as usize],
            cols,
            starts,
            ends,
            trail: Vec::new(),
        }
    }

    fn slot(&self, (x, y): (i64, i64)) -> usize {
        (y * self.cols + x) as usize
    }

    /// Visits every disjoint tuple; `visit` returns `false` to stop early.
    fn run(&mut self, visit: &mut Visit) {
        self.path(0, visit);
    }

    fn path(&mut self, i: usize, visit: &mut Visit) -> bool {
        if i == self.starts.len() {
            return visit(&self.trail);
        }
        let (start, end) = (self.starts[i], self.ends[i]);
        if start.0 < end.0 || start.1 > end.1 || self.used[self.slot(start)] {
            return true;
        }
        self.trail.push(vec![start]);
        let s = self.slot(start);
        self.used[s] = true;
        let go = self.walk(i, start, end, visit);
        self.used[s] = false;
        self.trail.pop();
        go
    }

    fn walk(
        &mut self,
        i: usize,
        at: (i64, i64),
        end: (i64, i64),
        visit: &mut Visit,
    ) -> bool {
        if at == end {
            return self.path(i + 1, visit);
        }
        let mut next = Vec::with_capacity(2);
        if at.1 < end.1 {
            next.push((at.0, at.1 + 1));
        }
        if at.0 > end.0 {
            next.push((at.0 - 1, at.1));
        }
        for p in next {
            let k = self.slot(p);
            if self.used[k] {
                continue;
            }
            self.used[k] = true;
            self.trail[i].push(p);
            let go = self.walk(i, p, end, visit);
            self.trail[i].pop();
            self.used[k] = false;
            if !go {
                return false;
            }
        }
        true
    }
}

type Points = Vec<(i64, i64)>;

fn endpoints(region: &RegionSpec, omit_rows: &[usize], omit_cols: &[usize]) -> Result<(Points, Points)> {
    region.check_domain()?;
    let n = region.n;
    if omit_rows.len() != omit_cols.len() {
        return Err(Error::SelectorOutOfBounds(format!(
            "{} start points but {} end points omitted",
            omit_rows.len(),
            omit_cols.len()
        )));
    }
    if let Some(i) = omit_rows.iter().chain(omit_cols).find(|&&i| i == 0 || i > n) {
        return Err(Error::SelectorOutOfBounds(format!("index {i} not in 1..={n}")));
    }
    let starts = (1..=n).filter(|i| !omit_rows.contains(i)).map(|i| region.start(i)).collect();
    let ends = (1..=n).filter(|j| !omit_cols.contains(j)).map(|j| region.end(j)).collect();
    Ok((starts, ends))
}

/// Number of tuples of vertex-disjoint paths joining the remaining start
/// points to the remaining end points in order.
pub fn enumerate_path_tuples(region: &RegionSpec, omit_rows: &[usize], omit_cols: &[usize]) -> Result<u64> {
    let (starts, ends) = endpoints(region, omit_rows, omit_cols)?;
    if starts.len() != ends.len() {
        return Err(Error::SelectorOutOfBounds("duplicate omitted index".into()));
    }
    if ends.iter().any(|e| e.1 < 0) {
        return Ok(0);
    }
    let mut count = 0u64;
    Search::new(starts, ends).run(&mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// Up to `limit` path tuples, in search order.
pub fn path_tuples(region: &RegionSpec, omit_rows: &[usize], omit_cols: &[usize], limit: usize) -> Result<Vec<PathTuple>> {
    let (starts, ends) = endpoints(region, omit_rows, omit_cols)?;
    let mut out = Vec::new();
    if ends.iter().any(|e| e.1 < 0) || limit == 0 {
        return Ok(out);
    }
    Search::new(starts, ends).run(&mut |paths| {
        out.push(PathTuple { paths: paths.to_vec() });
        out.len() < limit
    });
    Ok(out)
}

/// Paths from `(x, 0)` to `(0, y)`, by search.
pub fn single_path_count(x: i64, y: i64) -> u64 {
    if x < 0 || y < 0 {
        return 0;
    }
    let mut count = 0u64;
    Search::new(vec![(x, 0)], vec![(0, y)]).run(&mut |_| {
        count += 1;
        true
    });
    count
}
