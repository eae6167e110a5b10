//! Littlewood-Richardson tableau enumeration.
//!
//! Both routines fill a skew diagram row by row, top to bottom, with labels
//! weakly increasing along rows and strictly increasing down columns, and
//! keep the reverse reading word (right to left, top to bottom) a lattice
//! word. Reading a row right to left visits its largest labels first, so the
//! lattice condition for one row is `count[j-1] >= count[j] + row[j]` against
//! the counts of the rows above.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::Partition;

pub(crate) type Table = Arc<Vec<(Partition, u64)>>;
type Key = (Partition, Partition);
type Entries = Vec<(Key, Table)>;

static PRODUCTS: LazyLock<RwLock<HashMap<Key, Table>>> = LazyLock::new(Default::default);
static SKEWS: LazyLock<RwLock<HashMap<Key, Table>>> = LazyLock::new(Default::default);

fn cached(cache: &RwLock<HashMap<Key, Table>>, key: Key, compute: impl FnOnce(&Key) -> Vec<(Partition, u64)>) -> Table {
    if let Some(t) = cache.read().unwrap().get(&key) {
        return t.clone();
    }
    let table = Arc::new(compute(&key));
    cache.write().unwrap().entry(key).or_insert(table).clone()
}

/// `s_lambda * s_mu = sum_nu c^nu_{lambda mu} s_nu`, in canonical order.
pub(crate) fn product(lambda: &Partition, mu: &Partition) -> Table {
    // Fewer labels to place means a smaller search.
    let (a, b) = if lambda.weight() >= mu.weight() { (lambda, mu) } else { (mu, lambda) };
    cached(&PRODUCTS, (a.clone(), b.clone()), |(a, b)| product_uncached(a, b))
}

/// `s_{lambda/mu} = sum_eta c^lambda_{mu eta} s_eta`, in canonical order.
pub(crate) fn skew(lambda: &Partition, mu: &Partition) -> Table {
    if !lambda.contains(mu) {
        return Arc::new(Vec::new());
    }
    cached(&SKEWS, (lambda.clone(), mu.clone()), |(l, m)| skew_uncached(l, m))
}

pub(crate) fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    product(lambda, mu)
        .iter()
        .find(|(p, _)| p == nu)
        .map_or(0, |(_, c)| *c)
}

fn finish(counts: HashMap<Vec<usize>, u64>) -> Vec<(Partition, u64)> {
    let mut out: Vec<_> = counts
        .into_iter()
        .map(|(parts, c)| (Partition::from_parts_unchecked(parts), c))
        .collect();
    out.sort();
    out
}

struct ProductSearch<'a> {
    base: Vec<usize>,
    content: &'a [usize],
    remaining: Vec<usize>,
    counts: Vec<usize>,
    rows: Vec<usize>,
    fills: Vec<Vec<usize>>,
    found: HashMap<Vec<usize>, u64>,
}

fn product_uncached(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    if mu.is_empty() {
        return vec![(lambda.clone(), 1)];
    }
    let nrows = lambda.len() + mu.len();
    let mut search = ProductSearch {
        base: (0..nrows).map(|i| lambda.part(i)).collect(),
        content: mu.parts(),
        remaining: mu.parts().to_vec(),
        counts: vec![0; mu.len()],
        rows: Vec::with_capacity(nrows),
        fills: Vec::with_capacity(nrows),
        found: HashMap::new(),
    };
    let mut row = Vec::new();
    search.fill_row(0, 0, &mut row);
    finish(search.found)
}

impl ProductSearch<'_> {
    /// Chooses how many copies of `label` go into row `r`; `row` holds the
    /// labels already placed in this row, in column order.
    fn fill_row(&mut self, r: usize, label: usize, row: &mut Vec<usize>) {
        if label == self.content.len() {
            self.close_row(r, row);
            return;
        }
        let start = self.base[r];
        let limit = if r == 0 { usize::MAX } else { self.rows[r - 1] };
        let max_by_lattice = if label == 0 {
            usize::MAX
        } else {
            self.counts[label - 1] - self.counts[label]
        };
        let max_n = self.remaining[label].min(max_by_lattice);
        let placed_before = row.len();
        let mut n = 0;
        loop {
            self.fill_row(r, label + 1, row);
            if n == max_n {
                break;
            }
            let col = start + placed_before + n;
            if col >= limit || !self.column_ok(r, col, label) {
                break;
            }
            row.push(label);
            n += 1;
        }
        row.truncate(placed_before);
    }

    fn column_ok(&self, r: usize, col: usize, label: usize) -> bool {
        if r == 0 {
            return true;
        }
        let above_start = self.base[r - 1];
        if col < above_start {
            return true;
        }
        self.fills[r - 1][col - above_start] < label
    }

    fn close_row(&mut self, r: usize, row: &mut [usize]) {
        let len = self.base[r] + row.len();
        for &l in row.iter() {
            self.remaining[l] -= 1;
            self.counts[l] += 1;
        }
        if self.remaining.iter().all(|&x| x == 0) {
            let mut parts: Vec<usize> = self.rows.clone();
            parts.push(len);
            parts.extend_from_slice(&self.base[r + 1..]);
            while parts.last() == Some(&0) {
                parts.pop();
            }
            *self.found.entry(parts).or_default() += 1;
        } else if r + 1 < self.base.len() && len > 0 {
            self.rows.push(len);
            self.fills.push(row.to_vec());
            let mut next = Vec::new();
            self.fill_row(r + 1, 0, &mut next);
            self.rows.pop();
            self.fills.pop();
        }
        for &l in row.iter() {
            self.remaining[l] += 1;
            self.counts[l] -= 1;
        }
    }
}

struct SkewSearch<'a> {
    outer: &'a [usize],
    inner: Vec<usize>,
    counts: Vec<usize>,
    fills: Vec<Vec<usize>>,
    found: HashMap<Vec<usize>, u64>,
}

fn skew_uncached(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let mut search = SkewSearch {
        outer: lambda.parts(),
        inner: (0..lambda.len()).map(|i| mu.part(i)).collect(),
        counts: vec![0; lambda.len()],
        fills: Vec::with_capacity(lambda.len()),
        found: HashMap::new(),
    };
    let mut row = Vec::new();
    search.fill_row(0, 0, &mut row);
    finish(search.found)
}

impl SkewSearch<'_> {
    fn fill_row(&mut self, r: usize, label: usize, row: &mut Vec<usize>) {
        if r == self.outer.len() {
            let mut content: Vec<usize> = self.counts.clone();
            while content.last() == Some(&0) {
                content.pop();
            }
            *self.found.entry(content).or_default() += 1;
            return;
        }
        let width = self.outer[r] - self.inner[r];
        if row.len() == width {
            for &l in row.iter() {
                self.counts[l] += 1;
            }
            self.fills.push(std::mem::take(row));
            let mut next = Vec::new();
            self.fill_row(r + 1, 0, &mut next);
            *row = self.fills.pop().unwrap();
            for &l in row.iter() {
                self.counts[l] -= 1;
            }
            return;
        }
        // A lattice word puts label j no higher than row j.
        if label > r {
            return;
        }
        let max_by_lattice = if label == 0 {
            usize::MAX
        } else {
            self.counts[label - 1] - self.counts[label]
        };
        let placed_before = row.len();
        let max_n = (width - placed_before).min(max_by_lattice);
        let mut n = 0;
        loop {
            self.fill_row(r, label + 1, row);
            if n == max_n {
                break;
            }
            let col = self.inner[r] + placed_before + n;
            if !self.column_ok(r, col, label) {
                break;
            }
            row.push(label);
            n += 1;
        }
        row.truncate(placed_before);
    }

    fn column_ok(&self, r: usize, col: usize, label: usize) -> bool {
        if r == 0 {
            return true;
        }
        let above_start = self.inner[r - 1];
        if col < above_start {
            return true;
        }
        self.fills[r - 1][col - above_start] < label
    }
}

/// Snapshot of both caches, for persistence.
pub(crate) fn export() -> (Entries, Entries) {
    let dump = |c: &RwLock<HashMap<Key, Table>>| {
        let mut v: Vec<_> = c.read().unwrap().iter().map(|(k, t)| (k.clone(), t.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    };
    (dump(&PRODUCTS), dump(&SKEWS))
}

pub(crate) fn import_product(key: Key, table: Vec<(Partition, u64)>) {
    PRODUCTS.write().unwrap().entry(key).or_insert_with(|| Arc::new(table));
}

pub(crate) fn import_skew(key: Key, table: Vec<(Partition, u64)>) {
    SKEWS.write().unwrap().entry(key).or_insert_with(|| Arc::new(table));
}
