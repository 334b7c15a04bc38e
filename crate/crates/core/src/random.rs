//! Random gentle algebras for property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quiver::BoundQuiver;

const MAX_ATTEMPTS: usize = 10_000;

/// A connected, finite-dimensional gentle algebra with between 1 and
/// `max_vertices` vertices. Deterministic in `seed`.
pub fn random_gentle(seed: u64, max_vertices: usize) -> BoundQuiver {
    assert!(max_vertices >= 1, "max_vertices must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(q) = attempt(&mut rng, max_vertices) {
            return q;
        }
    }
    panic!("random_gentle: no instance after {MAX_ATTEMPTS} attempts (seed {seed})");
}

fn attempt(rng: &mut ChaCha8Rng, max_vertices: usize) -> Option<BoundQuiver> {
    let n = rng.gen_range(1..=max_vertices);
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    let mut arrows: Vec<(usize, usize)> = Vec::new();

    let mut add = |s: usize, t: usize, arrows: &mut Vec<(usize, usize)>| -> bool {
        if outdeg[s] < 2 && indeg[t] < 2 {
            outdeg[s] += 1;
            indeg[t] += 1;
            arrows.push((s, t));
            true
        } else {
            false
        }
    };

    // Spanning tree first, so every candidate is connected.
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let forward = rng.gen_bool(0.5);
        let (s, t) = if forward { (u, v) } else { (v, u) };
        if !add(s, t, &mut arrows) && !add(t, s, &mut arrows) {
            return None;
        }
    }
    let extra = rng.gen_range(0..=n / 2 + 1);
    for _ in 0..extra {
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        if s == t && !rng.gen_bool(0.2) {
            continue;
        }
        add(s, t, &mut arrows);
    }

    let mut relations: Vec<(usize, usize)> = Vec::new();
    let mut free_pairs: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        let ins: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].1 == v).collect();
        let outs: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].0 == v).collect();
        match (ins.len(), outs.len()) {
            (1, 1) => {
                let pair = (ins[0], outs[0]);
                if ins[0] == outs[0] || rng.gen_bool(0.5) {
                    relations.push(pair);
                } else {
                    free_pairs.push(pair);
                }
            }
            (2, 1) => {
                let k = rng.gen_range(0..2);
                relations.push((ins[k], outs[0]));
                free_pairs.push((ins[1 - k], outs[0]));
            }
            (1, 2) => {
                let k = rng.gen_range(0..2);
                relations.push((ins[0], outs[k]));
                free_pairs.push((ins[0], outs[1 - k]));
            }
            (2, 2) => {
                let k = rng.gen_range(0..2);
                relations.push((ins[0], outs[k]));
                relations.push((ins[1], outs[1 - k]));
                free_pairs.push((ins[0], outs[1 - k]));
                free_pairs.push((ins[1], outs[k]));
            }
            _ => {}
        }
    }

    let vnames: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let anames: Vec<String> = (0..arrows.len()).map(|i| format!("a{i}")).collect();
    let build = |relations: &[(usize, usize)]| {
        BoundQuiver::new(
            vnames.iter().cloned(),
            arrows
                .iter()
                .enumerate()
                .map(|(i, &(s, t))| (anames[i].clone(), vnames[s].clone(), vnames[t].clone())),
            relations
                .iter()
                .map(|&(a, b)| (anames[a].clone(), anames[b].clone())),
        )
        .expect("generated quiver is well formed")
    };

    // Break relation-free cycles by closing a free pair at a vertex with one
    // arrow in and one out; elsewhere a new relation would violate gentleness.
    let mut q = build(&relations);
    while let Some(cycle) = q.relation_free_cycle() {
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for k in 0..cycle.len() {
            let a = cycle[k];
            let b = cycle[(k + 1) % cycle.len()];
            let v = q.target(a);
            if q.indegree(v) == 1 && q.outdegree(v) == 1 {
                let ia = anames.iter().position(|x| x == q.arrow_name(a)).unwrap();
                let ib = anames.iter().position(|x| x == q.arrow_name(b)).unwrap();
                candidates.push((ia, ib));
            }
        }
        let &pick = candidates.choose(rng)?;
        free_pairs.retain(|&p| p != pick);
        relations.push(pick);
        q = build(&relations);
    }

    (q.is_gentle() && q.is_connected()).then_some(q)
}
