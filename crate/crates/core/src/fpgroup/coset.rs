//! HLT coset enumeration with lookahead.
//!
//! Cosets are defined in strict order (relator scans of coset `c`, then its
//! empty row entries, then `c+1`), so tables are reproducible. When the
//! coset budget is exhausted a lookahead pass scans every live coset without
//! making definitions; the coincidences it finds are collapsed and the table
//! is compacted before continuing.

use super::presentation::Presentation;
use super::word::{letter_gen, Letter, Word};
use serde::Serialize;

const NONE: u32 = u32::MAX;

/// Result of an enumeration. `complete == false` means the coset budget was
/// exhausted before the table closed; it is *not* evidence of infinite index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    /// `rows[c][2g]` is `c·g`, `rows[c][2g+1]` is `c·g⁻¹`.
    pub rows: Vec<Vec<usize>>,
    pub complete: bool,
    /// Total cosets defined during the run (a rough work measure).
    pub defined: usize,
}

impl CosetTable {
    pub fn index(&self) -> Option<usize> {
        self.complete.then_some(self.rows.len())
    }

    /// Right action of a word on a coset.
    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &x| self.rows[c][col(x)])
    }
}

/// Group order, or `Unknown` if enumeration did not close within the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Order {
    Finite(usize),
    Unknown,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Unknown => None,
        }
    }
}

#[inline]
fn col(x: Letter) -> usize {
    2 * letter_gen(x) + usize::from(x < 0)
}

struct NoSpace;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max: usize,
    defined: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ngens: usize, max: usize) -> Self {
        let ncols = 2 * ngens;
        Enumerator {
            ncols,
            table: vec![NONE; ncols],
            parent: vec![0],
            max,
            defined: 1,
            queue: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), NoSpace> {
        if self.len() >= self.max {
            return Err(NoSpace);
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.defined += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x ^ 1, NONE);
                let (e1, f1) = (self.rep(e), self.rep(f));
                let t = self.get(e1, x);
                if t != NONE {
                    self.merge(f1, t);
                } else {
                    let u = self.get(f1, x ^ 1);
                    if u != NONE {
                        self.merge(e1, u);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` at coset `c`; with `fill`, defines cosets to complete the scan.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), NoSpace> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Renumbers live cosets consecutively (order preserved). Returns old→new map.
    #[allow(clippy::needless_range_loop)]
    fn compact(&mut self) -> Vec<u32> {
        let n = self.len();
        let mut map = vec![NONE; n];
        let mut k = 0u32;
        for c in 0..n {
            if self.parent[c] == c as u32 {
                map[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..n {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.table[c * self.ncols + x];
                table.push(if d == NONE { NONE } else { map[d as usize] });
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        map
    }

    fn lookahead(&mut self, rels: &[Vec<usize>], subgens: &[Vec<usize>]) {
        for s in subgens {
            let _ = self.scan(0, s, false);
        }
        let mut c = 0;
        while c < self.len() as u32 {
            for r in rels {
                if !self.live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Lookahead + compaction; returns false if no space was recovered.
    fn recover(&mut self, rels: &[Vec<usize>], subgens: &[Vec<usize>], cur: &mut u32) -> bool {
        self.lookahead(rels, subgens);
        let map = self.compact();
        // resume at the first surviving coset at or after `cur`
        *cur = (*cur as usize..map.len())
            .map(|c| map[c])
            .find(|&m| m != NONE)
            .unwrap_or(self.len() as u32);
        self.len() < self.max
    }

    fn run(&mut self, rels: &[Vec<usize>], subgens: &[Vec<usize>]) -> bool {
        'sub: loop {
            for s in subgens {
                if self.scan(0, s, true).is_err() {
                    let mut z = 0;
                    if !self.recover(rels, subgens, &mut z) {
                        return false;
                    }
                    continue 'sub;
                }
            }
            break;
        }
        let mut c = 0u32;
        'outer: while (c as usize) < self.len() {
            if self.live(c) {
                for r in rels {
                    if !self.live(c) {
                        break;
                    }
                    if self.scan(c, r, true).is_err() {
                        if !self.recover(rels, subgens, &mut c) {
                            return false;
                        }
                        continue 'outer;
                    }
                }
                for x in 0..self.ncols {
                    if !self.live(c) {
                        break;
                    }
                    if self.get(c, x) == NONE && self.define(c, x).is_err() {
                        if !self.recover(rels, subgens, &mut c) {
                            return false;
                        }
                        continue 'outer;
                    }
                }
            }
            c += 1;
        }
        true
    }
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|&x| col(x)).collect()
}

/// Enumerates the cosets of `⟨subgens⟩` in the group presented by `p`.
pub fn coset_enumerate(p: &Presentation, subgens: &[Word], max_cosets: usize) -> CosetTable {
    assert!(max_cosets > 0, "max_cosets must be positive");
    let rels: Vec<Vec<usize>> = p.cyclic_relators().iter().map(columns).collect();
    let subs: Vec<Vec<usize>> = subgens.iter().map(columns).collect();
    let mut e = Enumerator::new(p.ngens(), max_cosets);
    let complete = e.run(&rels, &subs);
    e.compact();
    let ncols = e.ncols;
    let rows = (0..e.len())
        .map(|c| {
            (0..ncols)
                .map(|x| match e.table[c * ncols + x] {
                    NONE => usize::MAX,
                    d => d as usize,
                })
                .collect()
        })
        .collect();
    CosetTable {
        rows,
        complete,
        defined: e.defined,
    }
}

/// Order of the group, via enumeration over the trivial subgroup.
pub fn group_order(p: &Presentation, max_cosets: usize) -> Order {
    match coset_enumerate(p, &[], max_cosets).index() {
        Some(n) => Order::Finite(n),
        None => Order::Unknown,
    }
}
