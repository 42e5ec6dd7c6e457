use std::collections::HashSet;

use dancing_links::model::ListModel;
use dancing_links::Cdll;
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Cns(i64),
    Snc(i64),
    Rst,
    Tsr,
    Nth(usize),
    Remove(usize),
    Restore(usize),
}

/// What happened when an operation was offered to the harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Applied,
    /// `remove`/`restore` outside the dancing-links discipline (removing a
    /// node that is not linked, or restoring out of LIFO order); both sides
    /// are left untouched.
    Skipped,
}

pub fn apply<const N: usize>(list: Cdll<N>, op: Op) -> Cdll<N> {
    match op {
        Op::Cns(v) => list.cns(v),
        Op::Snc(v) => list.snc(v),
        Op::Rst => list.rst(),
        Op::Tsr => list.tsr(),
        Op::Nth(_) => list,
        Op::Remove(n) => list.remove(n),
        Op::Restore(n) => list.restore(n),
    }
}

pub fn apply_model(model: ListModel, op: Op) -> ListModel {
    match op {
        Op::Cns(v) => model.cns(v),
        Op::Snc(v) => model.snc(v),
        Op::Rst => model.rst(),
        Op::Tsr => model.tsr(),
        Op::Nth(_) => model,
        Op::Remove(n) => model.remove(n),
        Op::Restore(n) => model.restore(n),
    }
}

pub fn is_defined(model: &ListModel, op: Op) -> bool {
    match op {
        Op::Remove(n) => model.remove_is_defined(n),
        Op::Restore(n) => model.restore_is_defined(n),
        _ => true,
    }
}

/// A failed check, by the property it violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Well-formedness, consistency, or the removed slot was written.
    Preservation(String),
    /// The arena and the model disagree.
    Model(String),
    /// A guard fired but the output differs from the input.
    Guard(String),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Preservation(m) => write!(f, "preservation: {m}"),
            Violation::Model(m) => write!(f, "model: {m}"),
            Violation::Guard(m) => write!(f, "guard: {m}"),
        }
    }
}

/// Applies `op` to a list and its model and checks, on the result:
/// well-formedness, consistency, commutation with the model, the model's own
/// invariants, `nth` agreement, that `remove` never writes the removed slot,
/// and (for small capacities) that a firing guard returns the input exactly.
pub fn step<const N: usize>(
    list: Cdll<N>,
    model: ListModel,
    op: Op,
) -> Result<(Cdll<N>, ListModel, Step), Violation> {
    if !is_defined(&model, op) {
        return Ok((list, model, Step::Skipped));
    }
    if let Op::Nth(k) = op {
        let (got, want) = (list.nth(k), model.nth(k));
        if got != want {
            return Err(Violation::Model(format!("nth({k}) = {got}, model says {want}; {list:?}")));
        }
        return Ok((list, model, Step::Applied));
    }

    let removed_slot = match op {
        Op::Remove(n) if n < N => Some((n, list.nodes[n])),
        _ => None,
    };
    let before = (N <= 64).then(|| list.clone());
    let model_before_len = model.len();

    let list = apply(list, op);
    let model = apply_model(model, op);

    if !list.is_well_formed() {
        return Err(Violation::Preservation(format!("{op:?} broke well-formedness: {list:?}")));
    }
    if !list.is_consistent() {
        return Err(Violation::Preservation(format!("{op:?} broke consistency: {list:?}")));
    }
    if !model.is_valid() {
        return Err(Violation::Model(format!("{op:?} broke the model partition: {model:?}")));
    }
    match ListModel::abstract_from(&list) {
        Ok(a) if a == model => {}
        Ok(a) => return Err(Violation::Model(format!("{op:?}: abstract {a:?} != model {model:?}"))),
        Err(e) => return Err(Violation::Model(format!("{op:?}: {e}"))),
    }
    if let Some((n, node)) = removed_slot {
        if list.nodes[n] != node {
            return Err(Violation::Preservation(format!("remove({n}) wrote its own slot")));
        }
    }
    if let Some(before) = before {
        let guard_fired = match op {
            Op::Remove(n) => n >= N || n == before.head || before.count < 3,
            Op::Restore(n) => n >= N || n == before.head || before.count < 2 || before.count == N,
            _ => false,
        };
        if guard_fired && list != before {
            return Err(Violation::Guard(format!("{op:?}: guard fired but output differs")));
        }
        if guard_fired && model.len() != model_before_len {
            return Err(Violation::Guard(format!("{op:?}: model changed under a guard")));
        }
    }
    Ok((list, model, Step::Applied))
}

/// A random operation, with `remove`/`restore` arguments biased toward
/// indices that are currently meaningful.
pub fn random_op<R: Rng>(rng: &mut R, model: &ListModel) -> Op {
    let cap = model.capacity();
    let value = |rng: &mut R| {
        if rng.gen_bool(0.7) {
            rng.gen_range(-3..=3)
        } else {
            rng.gen()
        }
    };
    let index = |rng: &mut R| match rng.gen_range(0..20) {
        0 => 9000,
        1 => usize::MAX,
        _ => rng.gen_range(0..=cap),
    };
    match rng.gen_range(0..100) {
        0..=19 => Op::Cns(value(rng)),
        20..=39 => Op::Snc(value(rng)),
        40..=47 => Op::Rst,
        48..=55 => Op::Tsr,
        56..=63 => Op::Nth(rng.gen_range(0..=model.len() + 1)),
        64..=81 => {
            let n = if !model.is_empty() && rng.gen_bool(0.6) {
                model.linked[rng.gen_range(0..model.len())].0
            } else {
                index(rng)
            };
            Op::Remove(n)
        }
        _ => {
            let keys: Vec<usize> = model.detached.keys().copied().collect();
            let n = if !keys.is_empty() && rng.gen_bool(0.7) {
                keys[rng.gen_range(0..keys.len())]
            } else {
                index(rng)
            };
            Op::Restore(n)
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SequenceStats {
    pub applied: u64,
    pub skipped: u64,
}

/// Runs one random sequence of `len` operations from the empty list.
pub fn random_sequence<const N: usize, R: Rng>(
    rng: &mut R,
    len: usize,
) -> Result<SequenceStats, Violation> {
    let mut list = Cdll::<N>::new();
    let mut model = ListModel::new(N);
    let mut stats = SequenceStats::default();
    for _ in 0..len {
        let op = random_op(rng, &model);
        let (l, m, s) = step(list, model, op)?;
        list = l;
        model = m;
        match s {
            Step::Applied => stats.applied += 1,
            Step::Skipped => stats.skipped += 1,
        }
    }
    Ok(stats)
}

/// A random consistent list reached by `len` defined operations.
pub fn random_list<const N: usize, R: Rng>(rng: &mut R, len: usize) -> Cdll<N> {
    let mut list = Cdll::<N>::new();
    let mut model = ListModel::new(N);
    for _ in 0..len {
        let op = random_op(rng, &model);
        if is_defined(&model, op) {
            list = apply(list, op);
            model = apply_model(model, op);
        }
    }
    list
}

/// Exhaustive exploration of every operation sequence up to `depth` over
/// `alphabet`. Sequences reaching the same state share all continuations, so
/// each level is explored over distinct states only. Returns the number of
/// distinct (state, operation) transitions checked.
pub fn exhaustive<const N: usize>(alphabet: &[Op], depth: usize) -> Result<u64, Violation> {
    let mut frontier = vec![(Cdll::<N>::new(), ListModel::new(N))];
    let mut seen: HashSet<Cdll<N>> = frontier.iter().map(|(l, _)| l.clone()).collect();
    let mut checked = 0;
    for _ in 0..depth {
        let mut next = Vec::new();
        for (list, model) in &frontier {
            for &op in alphabet {
                let (l, m, s) = step(list.clone(), model.clone(), op)?;
                if s == Step::Applied {
                    checked += 1;
                    if seen.insert(l.clone()) {
                        next.push((l, m));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(checked)
}

/// Operations over values `{0, 1}` and every index up to one past
/// capacity, plus a far out-of-range index.
pub fn small_alphabet(capacity: usize) -> Vec<Op> {
    let mut ops = vec![Op::Cns(0), Op::Cns(1), Op::Snc(0), Op::Snc(1), Op::Rst, Op::Tsr];
    for n in (0..=capacity).chain([9000]) {
        ops.push(Op::Nth(n));
        ops.push(Op::Remove(n));
        ops.push(Op::Restore(n));
    }
    ops
}
