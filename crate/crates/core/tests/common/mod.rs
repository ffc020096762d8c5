//! Brute-force oracles written against the definitions only. None of them
//! call into the library beyond building `Graph` values.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reachkit::Graph;

pub type Set = BTreeSet<usize>;

pub fn set(items: &[usize]) -> Set {
    items.iter().copied().collect()
}

pub fn to_set(vs: &reachkit::VertexSet) -> Set {
    vs.iter().copied().collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `n` drawn from `lo..=hi` and mean degree near `deg`.
pub fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize, deg: f64) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = if n > 1 {
        (deg / (n - 1) as f64).min(1.0)
    } else {
        0.0
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn adj(g: &Graph) -> Vec<u64> {
    let mut a = vec![0u64; g.order()];
    for &(u, v) in g.edges() {
        a[u] |= 1 << v;
        a[v] |= 1 << u;
    }
    a
}

fn bits(mask: u64) -> Set {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Every maximum matching, each as a sorted edge list.
pub fn max_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    fn go(
        g: &Graph,
        used: &mut Vec<bool>,
        v: usize,
        cur: &mut Vec<(usize, usize)>,
        best: &mut (usize, Vec<Vec<(usize, usize)>>),
    ) {
        if v == g.order() {
            if cur.len() > best.0 {
                *best = (cur.len(), Vec::new());
            }
            if cur.len() == best.0 {
                best.1.push(cur.clone());
            }
            return;
        }
        // remaining vertices bound
        let free = (v..g.order()).filter(|&u| !used[u]).count();
        if cur.len() + free / 2 < best.0 {
            return;
        }
        if used[v] {
            return go(g, used, v + 1, cur, best);
        }
        go(g, used, v + 1, cur, best);
        for &w in g.neighbors(v) {
            if w > v && !used[w] {
                used[v] = true;
                used[w] = true;
                cur.push((v, w));
                go(g, used, v + 1, cur, best);
                cur.pop();
                used[v] = false;
                used[w] = false;
            }
        }
    }
    let mut best = (0, Vec::new());
    go(
        g,
        &mut vec![false; g.order()],
        0,
        &mut Vec::new(),
        &mut best,
    );
    for m in &mut best.1 {
        m.sort();
    }
    best.1.sort();
    best.1
}

pub fn mu(g: &Graph) -> usize {
    max_matchings(g).first().map_or(0, Vec::len)
}

/// All maximum independent sets by scanning every subset.
pub fn max_independent_sets(g: &Graph) -> Vec<Set> {
    let a = adj(g);
    let n = g.order();
    let mut best = 0;
    let mut out = Vec::new();
    for s in 0u64..1 << n {
        if (0..n).any(|v| s >> v & 1 == 1 && a[v] & s != 0) {
            continue;
        }
        let c = s.count_ones() as usize;
        if c > best {
            best = c;
            out.clear();
        }
        if c == best {
            out.push(bits(s));
        }
    }
    out
}

pub fn alpha(g: &Graph) -> usize {
    max_independent_sets(g)[0].len()
}

fn nbhd(a: &[u64], s: u64) -> u64 {
    (0..a.len())
        .filter(|&v| s >> v & 1 == 1)
        .fold(0, |acc, v| acc | a[v])
}

/// `max |X| - |N(X)|` over every subset `X`.
pub fn d_all_subsets(g: &Graph) -> i64 {
    let a = adj(g);
    (0u64..1 << g.order())
        .map(|s| s.count_ones() as i64 - nbhd(&a, s).count_ones() as i64)
        .max()
        .unwrap()
}

/// `d` over independent sets and the independent sets attaining it.
pub fn critical_independent_sets(g: &Graph) -> (i64, Vec<Set>) {
    let a = adj(g);
    let n = g.order();
    let mut best = i64::MIN;
    let mut out = Vec::new();
    for s in 0u64..1 << n {
        if (0..n).any(|v| s >> v & 1 == 1 && a[v] & s != 0) {
            continue;
        }
        let diff = s.count_ones() as i64 - nbhd(&a, s).count_ones() as i64;
        if diff > best {
            best = diff;
            out.clear();
        }
        if diff == best {
            out.push(bits(s));
        }
    }
    (best, out)
}

pub fn intersection(sets: &[Set], n: usize) -> Set {
    sets.iter().fold((0..n).collect(), |acc, s| {
        acc.intersection(s).copied().collect()
    })
}

pub fn union(sets: &[Set]) -> Set {
    sets.iter().flatten().copied().collect()
}

/// `(D, A, C)` from the definition: `D` is missed by some maximum matching.
pub fn gallai_edmonds(g: &Graph) -> (Set, Set, Set) {
    let n = g.order();
    let mut covered_by_all = vec![true; n];
    for m in max_matchings(g) {
        let mut hit = vec![false; n];
        for (u, v) in m {
            hit[u] = true;
            hit[v] = true;
        }
        for v in 0..n {
            covered_by_all[v] &= hit[v];
        }
    }
    let d: Set = (0..n).filter(|&v| !covered_by_all[v]).collect();
    let a: Set = (0..n)
        .filter(|v| !d.contains(v) && g.neighbors(*v).iter().any(|w| d.contains(w)))
        .collect();
    let c = (0..n)
        .filter(|v| !d.contains(v) && !a.contains(v))
        .collect();
    (d, a, c)
}

/// Odd cycles as canonical vertex sequences (smallest vertex first, second
/// vertex below the last).
pub fn odd_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let (s, v) = (path[0], *path.last().unwrap());
        for &w in g.neighbors(v) {
            if w == s && path.len() >= 3 && path.len() % 2 == 1 && path[1] < path[path.len() - 1] {
                out.push(path.clone());
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                go(g, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.order()];
    for s in 0..g.order() {
        on[s] = true;
        go(g, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out.sort();
    out
}

pub struct Reach {
    pub r: Set,
    pub odd: Set,
    pub even: Set,
}

/// Union of all flowers with blossom `cycle`, over all maximum matchings.
/// Stem vertices are classified by their distance from the base.
pub fn reach(g: &Graph, cycle: &[usize]) -> Reach {
    let n = g.order();
    let on_cycle: Set = cycle.iter().copied().collect();
    let mut out = Reach {
        r: Set::new(),
        odd: Set::new(),
        even: Set::new(),
    };
    for m in max_matchings(g) {
        let mut mate = vec![usize::MAX; n];
        for &(u, v) in &m {
            mate[u] = v;
            mate[v] = u;
        }
        let len = cycle.len();
        let matched_on_cycle = (0..len)
            .filter(|&i| mate[cycle[i]] == cycle[(i + 1) % len])
            .count();
        if matched_on_cycle != len / 2 {
            continue;
        }
        let base = *cycle
            .iter()
            .find(|&&v| mate[v] == usize::MAX || !on_cycle.contains(&mate[v]))
            .unwrap();
        // stems: alternating paths from base, first edge matched, ending unsaturated
        let mut stems: Vec<Vec<usize>> = Vec::new();
        fn walk(
            g: &Graph,
            mate: &[usize],
            path: &mut Vec<usize>,
            cyc: &Set,
            stems: &mut Vec<Vec<usize>>,
        ) {
            let v = *path.last().unwrap();
            let even = path.len() % 2 == 1;
            if even && mate[v] == usize::MAX {
                stems.push(path.clone());
                return;
            }
            let nexts: Vec<usize> = if even {
                vec![mate[v]]
            } else {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| w != mate[v])
                    .collect()
            };
            for w in nexts {
                if cyc.contains(&w) || path.contains(&w) {
                    continue;
                }
                path.push(w);
                walk(g, mate, path, cyc, stems);
                path.pop();
            }
        }
        let others: Set = on_cycle.iter().copied().filter(|&v| v != base).collect();
        walk(g, &mate, &mut vec![base], &others, &mut stems);
        for stem in stems {
            out.r.extend(cycle.iter().copied());
            for (i, &v) in stem.iter().enumerate().skip(1) {
                out.r.insert(v);
                if i % 2 == 1 {
                    out.odd.insert(v);
                } else {
                    out.even.insert(v);
                }
            }
        }
    }
    out
}

/// Alternating path from `x` whose first edge is matched and last edge is
/// not, ending at an unsaturated vertex.
pub fn has_mn_path_to_unsaturated(g: &Graph, m: &[(usize, usize)], x: usize) -> bool {
    let n = g.order();
    let mut mate = vec![usize::MAX; n];
    for &(u, v) in m {
        mate[u] = v;
        mate[v] = u;
    }
    fn go(g: &Graph, mate: &[usize], v: usize, take_matched: bool, on: &mut [bool]) -> bool {
        if take_matched {
            let w = mate[v];
            if w == usize::MAX || on[w] {
                return false;
            }
            on[w] = true;
            let r = go(g, mate, w, false, on);
            on[w] = false;
            return r;
        }
        for &w in g.neighbors(v) {
            if w == mate[v] || on[w] {
                continue;
            }
            if mate[w] == usize::MAX {
                return true;
            }
            on[w] = true;
            let r = go(g, mate, w, true, on);
            on[w] = false;
            if r {
                return true;
            }
        }
        false
    }
    let mut on = vec![false; n];
    on[x] = true;
    mate[x] != usize::MAX && go(g, &mate, x, true, &mut on)
}

/// Determinant by expansion over all permutations, with the sign taken from
/// the inversion count.
pub fn det_by_permutations(g: &Graph) -> i128 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    fn go(k: usize, perm: &mut Vec<usize>, g: &Graph, total: &mut i128) {
        let n = perm.len();
        if k == n {
            {
                let inv = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                *total += if inv % 2 == 0 { 1 } else { -1 };
            }
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            // a zero entry kills the term
            if g.has_edge(k, perm[k]) {
                go(k + 1, perm, g, total);
            }
            perm.swap(k, i);
        }
    }
    go(0, &mut perm, g, &mut total);
    total
}
