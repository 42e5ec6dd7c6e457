use dancing_links::encode::SudokuGrid;
use dancing_links::ExactCoverInstance;
use rand::seq::SliceRandom;
use rand::Rng;

use super::oracle::sudoku_solutions;

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Random instance; each row is a random nonempty subset of the columns.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    max_primary: usize,
    max_secondary: usize,
    max_rows: usize,
) -> ExactCoverInstance {
    let p = rng.gen_range(0..=max_primary);
    let s = rng.gen_range(0..=max_secondary);
    let mut inst = ExactCoverInstance::new(names("P", p), names("S", s));
    let columns: Vec<String> = inst.columns().map(str::to_string).collect();
    if columns.is_empty() {
        return inst;
    }
    let rows = rng.gen_range(0..=max_rows);
    for _ in 0..rows {
        let density = rng.gen_range(0.15..0.6);
        let mut row: Vec<String> = columns
            .iter()
            .filter(|_| rng.gen_bool(density))
            .cloned()
            .collect();
        if row.is_empty() {
            row.push(columns[rng.gen_range(0..columns.len())].clone());
        }
        row.shuffle(rng);
        inst.add_row(row);
    }
    inst
}

/// Every instance with at most `max_columns` columns (each split into a
/// primary prefix and secondary suffix) and at most `max_rows` rows, rows
/// being ordered sequences of nonempty column subsets.
pub fn all_small_instances(max_columns: usize, max_rows: usize) -> Vec<ExactCoverInstance> {
    let mut out = Vec::new();
    for columns in 0..=max_columns {
        for primary in 0..=columns {
            let base = ExactCoverInstance::new(names("P", primary), names("S", columns - primary));
            let all: Vec<String> = base.columns().map(str::to_string).collect();
            let subsets: Vec<Vec<String>> = (1u32..(1 << columns))
                .map(|mask| {
                    (0..columns)
                        .filter(|&c| mask & (1 << c) != 0)
                        .map(|c| all[c].clone())
                        .collect()
                })
                .collect();
            let mut level = vec![base];
            out.extend(level.iter().cloned());
            for _ in 0..max_rows {
                let mut next = Vec::new();
                for inst in &level {
                    for s in &subsets {
                        let mut grown = inst.clone();
                        grown.add_row(s.clone());
                        next.push(grown);
                    }
                }
                out.extend(next.iter().cloned());
                level = next;
            }
        }
    }
    out
}

/// Random complete grid by randomized backtracking.
fn random_solved_grid<R: Rng>(rng: &mut R) -> [u8; 81] {
    fn fill<R: Rng>(g: &mut [u8; 81], i: usize, rng: &mut R) -> bool {
        if i == 81 {
            return true;
        }
        let (r, c) = (i / 9, i % 9);
        let mut digits: Vec<u8> = (1..=9).collect();
        digits.shuffle(rng);
        for d in digits {
            let clash = (0..9).any(|k| {
                g[r * 9 + k] == d
                    || g[k * 9 + c] == d
                    || g[(r / 3 * 3 + k / 3) * 9 + c / 3 * 3 + k % 3] == d
            });
            if !clash {
                g[i] = d;
                if fill(g, i + 1, rng) {
                    return true;
                }
                g[i] = 0;
            }
        }
        false
    }
    let mut g = [0u8; 81];
    assert!(fill(&mut g, 0, rng));
    g
}

/// A puzzle with exactly one solution, and that solution. Clues are removed
/// in random order while the backtracking oracle still finds a unique
/// completion.
pub fn unique_sudoku<R: Rng>(rng: &mut R) -> (SudokuGrid, SudokuGrid) {
    let solution = random_solved_grid(rng);
    let mut puzzle = solution;
    let mut order: Vec<usize> = (0..81).collect();
    order.shuffle(rng);
    for i in order {
        let keep = puzzle[i];
        puzzle[i] = 0;
        if sudoku_solutions(&puzzle, 2).len() != 1 {
            puzzle[i] = keep;
        }
    }
    let found = sudoku_solutions(&puzzle, 2);
    assert_eq!(found, vec![solution]);
    (SudokuGrid { cells: puzzle }, SudokuGrid { cells: solution })
}
