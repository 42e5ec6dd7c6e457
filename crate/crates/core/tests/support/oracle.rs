use std::collections::{BTreeSet, HashMap};

use dancing_links::ExactCoverInstance;

/// Every exact cover of `instance` by subset enumeration.
///
/// A cover selects rows so that each primary column is hit exactly once and
/// each secondary column at most once. Rows without any primary column are
/// never selected (Algorithm X only picks rows through a primary column).
pub fn exact_covers(instance: &ExactCoverInstance) -> BTreeSet<Vec<usize>> {
    let index: HashMap<&str, usize> = instance
        .primary
        .iter()
        .chain(&instance.secondary)
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let primary = instance.primary.len();
    let rows: Vec<Vec<usize>> = instance
        .rows
        .iter()
        .map(|r| r.iter().map(|n| index[n.as_str()]).collect())
        .collect();
    assert!(rows.len() < 24, "brute force is exponential in rows");

    let mut out = BTreeSet::new();
    'subsets: for mask in 0u32..(1 << rows.len()) {
        let mut hits = vec![0u32; index.len()];
        let mut chosen = Vec::new();
        for (r, cols) in rows.iter().enumerate() {
            if mask & (1 << r) == 0 {
                continue;
            }
            if !cols.iter().any(|&c| c < primary) {
                continue 'subsets;
            }
            for &c in cols {
                hits[c] += 1;
            }
            chosen.push(r);
        }
        if hits[..primary].iter().all(|&h| h == 1) && hits[primary..].iter().all(|&h| h <= 1) {
            out.insert(chosen);
        }
    }
    out
}

/// n-queens solutions by checking every permutation of files.
pub fn queens_count(n: usize) -> u64 {
    fn permute(files: &mut Vec<usize>, k: usize, count: &mut u64) {
        if k == files.len() {
            let n = files.len();
            let ok = (0..n).all(|a| {
                (a + 1..n).all(|b| files[a].abs_diff(files[b]) != b - a)
            });
            if ok {
                *count += 1;
            }
            return;
        }
        for i in k..files.len() {
            files.swap(k, i);
            permute(files, k + 1, count);
            files.swap(k, i);
        }
    }
    let mut files: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut files, 0, &mut count);
    count
}

/// Plain cell-by-cell Sudoku backtracking; always branches on the blank cell
/// with the fewest candidates. Returns up to `limit` completions.
pub fn sudoku_solutions(cells: &[u8; 81], limit: usize) -> Vec<[u8; 81]> {
    fn candidates(g: &[u8; 81], i: usize) -> u16 {
        let (r, c) = (i / 9, i % 9);
        let (br, bc) = (r / 3 * 3, c / 3 * 3);
        let mut used = 0u16;
        for k in 0..9 {
            used |= 1 << g[r * 9 + k];
            used |= 1 << g[k * 9 + c];
            used |= 1 << g[(br + k / 3) * 9 + bc + k % 3];
        }
        !used & 0b11_1111_1110
    }
    fn go(g: &mut [u8; 81], limit: usize, out: &mut Vec<[u8; 81]>) {
        if out.len() >= limit {
            return;
        }
        let mut best: Option<(usize, u16)> = None;
        for i in 0..81 {
            if g[i] == 0 {
                let c = candidates(g, i);
                if best.is_none_or(|(_, b)| c.count_ones() < b.count_ones()) {
                    best = Some((i, c));
                }
            }
        }
        let Some((i, cands)) = best else {
            out.push(*g);
            return;
        };
        for d in 1..=9u8 {
            if cands & (1 << d) != 0 {
                g[i] = d;
                go(g, limit, out);
                g[i] = 0;
            }
        }
    }
    let mut g = *cells;
    let mut out = Vec::new();
    go(&mut g, limit, &mut out);
    out
}
