//! Exact local antimagic (total) chromatic numbers of small graphs by
//! branch-and-prune over label assignments.
//!
//! Elements (vertices and edges, or edges only) are labeled in a fixed
//! order: vertices by decreasing degree, each followed by its not yet
//! listed edges. A vertex weight is final once every incident element has a
//! label. A branch dies when two adjacent final weights tie, when the final
//! weights already use as many colors as the best labeling found, or when
//! the labels still free cannot give some open vertex an existing color
//! although a new color would overflow the bound.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{dispatch, Exactness};
use crate::error::OracleError;
use crate::graph::{build_amalgam, Graph};
use crate::matrix::MatrixKind;
use crate::verify::Labeling;

/// Hard cap on the number of labeled elements; labels live in a `u64` mask.
const MAX_ELEMENTS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Largest accepted number of labeled elements (`p + q`, or `q`).
    pub max_elems: usize,
    /// Wall-clock budget; the search reports its best result when it runs out.
    pub time_budget: Option<Duration>,
    /// Stop as soon as a labeling with at most this many colors is found.
    pub target: Option<usize>,
    /// Place label 1 on one element per automorphism orbit only.
    pub symmetry: bool,
    /// Tie and bound pruning. Off means plain enumeration.
    pub prune: bool,
    /// With pruning on, stop once a labeling reaches the clique number,
    /// which no labeling can beat.
    pub stop_at_lower_bound: bool,
    /// Worker threads; 0 uses the rayon default. 1 runs sequentially and
    /// makes the witness deterministic.
    pub jobs: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_elems: 12,
            time_budget: None,
            target: None,
            symmetry: true,
            prune: true,
            stop_at_lower_bound: true,
            jobs: 0,
        }
    }
}

impl SearchLimits {
    /// No pruning and no symmetry breaking.
    pub fn unpruned() -> Self {
        SearchLimits { symmetry: false, prune: false, stop_at_lower_bound: false, ..Self::default() }
    }

    pub fn single_worker(mut self) -> Self {
        self.jobs = 1;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    /// Fewest distinct weights found; `None` if no proper labeling exists
    /// (or none was found within the budget).
    pub value: Option<usize>,
    pub witness: Option<Labeling>,
    pub nodes: u64,
    /// The search showed that no labeling uses fewer colors than `value`.
    pub proven_exact: bool,
}

/// Builder output compared against the oracle on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub builder_colors: usize,
    pub exactness: Exactness,
    pub oracle: OracleResult,
    /// Builder colors are at least the oracle value, and equal to it when
    /// the builder claims exactness. Only meaningful when the oracle result
    /// is proven exact.
    pub consistent: bool,
}

pub fn exact_chi_lat<G: Graph + ?Sized>(g: &G, lim: &SearchLimits) -> Result<OracleResult, OracleError> {
    search(g, MatrixKind::Total, lim)
}

pub fn exact_chi_la<G: Graph + ?Sized>(g: &G, lim: &SearchLimits) -> Result<OracleResult, OracleError> {
    search(g, MatrixKind::EdgeOnly, lim)
}

/// Runs the builder for `(m, n, r)` and the oracle on the same graph.
pub fn cross_check(m: usize, n: usize, r: usize, lim: &SearchLimits) -> Result<CrossCheck, OracleError> {
    let g = build_amalgam(m, n, r).map_err(|e| OracleError::Build(e.into()))?;
    let elements = g.total_elements();
    if elements > lim.max_elems {
        return Err(OracleError::TooLarge { elements, limit: lim.max_elems });
    }
    let report = dispatch(m, n, r)?;
    let oracle = exact_chi_lat(&g, lim)?;
    let consistent = oracle.value.is_some_and(|v| match report.exactness {
        Exactness::Exact => report.colors == v,
        Exactness::UpperBound => report.colors >= v,
    });
    Ok(CrossCheck { m, n, r, builder_colors: report.colors, exactness: report.exactness, oracle, consistent })
}

#[derive(Debug, Clone, Copy)]
enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

impl Element {
    fn touches(self) -> ([usize; 2], usize) {
        match self {
            Element::Vertex(v) => ([v, v], 1),
            Element::Edge(a, b) => ([a, b], 2),
        }
    }
}

struct Problem {
    kind: MatrixKind,
    p: usize,
    elements: Vec<Element>,
    adj: Vec<Vec<usize>>,
    /// Labeled elements touching each vertex.
    incident: Vec<usize>,
    /// Search order (indices into `elements`).
    order: Vec<usize>,
    /// Clique number: no proper labeling uses fewer colors.
    lower_bound: usize,
}

impl Problem {
    fn new<G: Graph + ?Sized>(g: &G, kind: MatrixKind) -> Self {
        let p = g.order();
        let edges = g.edge_list();
        let mut adj = vec![Vec::new(); p];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut elements = Vec::new();
        if kind == MatrixKind::Total {
            elements.extend((0..p).map(Element::Vertex));
        }
        let first_edge = elements.len();
        elements.extend(edges.iter().map(|&(a, b)| Element::Edge(a, b)));
        let mut incident = vec![0; p];
        for e in &elements {
            let (vs, k) = e.touches();
            for &v in &vs[..k] {
                incident[v] += 1;
            }
        }

        let mut by_degree: Vec<usize> = (0..p).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
        let mut listed = vec![false; elements.len()];
        let mut order = Vec::with_capacity(elements.len());
        for &v in &by_degree {
            if kind == MatrixKind::Total {
                order.push(v);
                listed[v] = true;
            }
            for (k, &(a, b)) in edges.iter().enumerate() {
                let e = first_edge + k;
                if (a == v || b == v) && !listed[e] {
                    order.push(e);
                    listed[e] = true;
                }
            }
        }
        let lower_bound = clique_number(&adj).max(1);
        Problem { kind, p, elements, adj, incident, order, lower_bound }
    }

    fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; self.p];
        let mut used = vec![false; self.p];
        self.extend_automorphism(0, &mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, v: usize, perm: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if v == self.p {
            out.push(perm.to_vec());
            return;
        }
        for image in 0..self.p {
            if used[image] || self.adj[image].len() != self.adj[v].len() {
                continue;
            }
            let fits = (0..v).all(|u| self.adj[v].contains(&u) == self.adj[image].contains(&perm[u]));
            if fits {
                perm[v] = image;
                used[image] = true;
                self.extend_automorphism(v + 1, perm, used, out);
                used[image] = false;
            }
        }
        perm[v] = usize::MAX;
    }

    /// One element per orbit of the automorphism group acting on elements.
    fn orbit_representatives(&self) -> Vec<usize> {
        let index = |e: Element| -> usize {
            self.elements
                .iter()
                .position(|&x| match (x, e) {
                    (Element::Vertex(a), Element::Vertex(b)) => a == b,
                    (Element::Edge(a, b), Element::Edge(c, d)) => (a, b) == (c.min(d), c.max(d)),
                    _ => false,
                })
                .expect("automorphisms map elements to elements")
        };
        let mut rep: Vec<usize> = (0..self.elements.len()).collect();
        for perm in self.automorphisms() {
            for (k, &e) in self.elements.iter().enumerate() {
                let image = match e {
                    Element::Vertex(v) => index(Element::Vertex(perm[v])),
                    Element::Edge(a, b) => index(Element::Edge(perm[a], perm[b])),
                };
                rep[k] = rep[k].min(image);
            }
        }
        // a single pass over a group reaches every orbit member directly
        let mut reps: Vec<usize> = rep.iter().enumerate().filter(|&(k, &r)| k == r).map(|(k, _)| k).collect();
        reps.sort_by_key(|&k| self.order.iter().position(|&o| o == k));
        reps
    }

    fn labeling(&self, labels: &[u64]) -> Labeling {
        let edges = self.elements.iter().zip(labels).filter_map(|(e, &l)| match *e {
            Element::Edge(a, b) => Some(((a, b), l)),
            Element::Vertex(_) => None,
        });
        match self.kind {
            MatrixKind::Total => Labeling::total(labels[..self.p].to_vec(), edges),
            MatrixKind::EdgeOnly => Labeling::edge_only(edges),
        }
    }
}

fn clique_number(adj: &[Vec<usize>]) -> usize {
    fn grow(adj: &[Vec<usize>], clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..adj.len() {
            if clique.iter().all(|u| adj[v].contains(u)) {
                clique.push(v);
                grow(adj, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = 0;
    grow(adj, &mut Vec::new(), 0, &mut best);
    best
}

/// State shared by all workers.
struct Shared<'a> {
    problem: &'a Problem,
    lim: &'a SearchLimits,
    /// Colors of the best labeling so far; `usize::MAX` before the first.
    best: AtomicUsize,
    witness: Mutex<Option<(usize, Vec<u64>)>>,
    stop: AtomicBool,
    timed_out: AtomicBool,
    nodes: AtomicU64,
    deadline: Option<Instant>,
}

impl Shared<'_> {
    fn record(&self, colors: usize, labels: &[u64]) {
        let mut w = self.witness.lock().expect("witness lock");
        let better = match &*w {
            None => true,
            Some((c, old)) => colors < *c || (colors == *c && labels < old.as_slice()),
        };
        if better {
            *w = Some((colors, labels.to_vec()));
        }
        self.best.fetch_min(colors, Ordering::SeqCst);
        let reached = self.lim.target.is_some_and(|t| colors <= t)
            || (self.lim.prune && self.lim.stop_at_lower_bound && colors <= self.problem.lower_bound);
        if reached {
            self.stop.store(true, Ordering::SeqCst);
        }
    }
}

/// One worker's mutable search state.
#[derive(Clone)]
struct Cursor {
    labels: Vec<u64>,
    free: u64,
    partial: Vec<u64>,
    missing: Vec<usize>,
    /// Final weights, `None` while a vertex is open.
    weight: Vec<Option<u64>>,
    /// Distinct final weights with multiplicities.
    colors: Vec<(u64, usize)>,
    nodes: u64,
}

impl Cursor {
    fn new(problem: &Problem) -> Self {
        let n = problem.elements.len();
        // a vertex with nothing to label (isolated, edge-only) weighs 0
        let weight: Vec<Option<u64>> = problem.incident.iter().map(|&k| (k == 0).then_some(0)).collect();
        let colors = if weight.contains(&Some(0)) {
            vec![(0, weight.iter().filter(|w| w.is_some()).count())]
        } else {
            Vec::new()
        };
        Cursor {
            labels: vec![0; n],
            // bit l-1 set means label l is free
            free: (1u64 << n) - 1,
            partial: vec![0; problem.p],
            missing: problem.incident.clone(),
            weight,
            colors,
            nodes: 0,
        }
    }

    /// Assigns `label` to element `e`. Returns false if pruning rejects the
    /// result; the assignment must be undone either way.
    fn place(&mut self, problem: &Problem, e: usize, label: u64, prune: bool, best: usize) -> bool {
        self.labels[e] = label;
        self.free &= !(1 << (label - 1));
        let (vs, k) = problem.elements[e].touches();
        let mut ok = true;
        for &v in &vs[..k] {
            self.partial[v] += label;
            self.missing[v] -= 1;
            if self.missing[v] == 0 {
                let w = self.partial[v];
                self.weight[v] = Some(w);
                match self.colors.iter_mut().find(|(c, _)| *c == w) {
                    Some(slot) => slot.1 += 1,
                    None => self.colors.push((w, 1)),
                }
                if prune && problem.adj[v].iter().any(|&u| self.weight[u] == Some(w)) {
                    ok = false;
                }
            }
        }
        if ok && prune {
            ok = self.colors.len() < best && !self.forced_overflow(problem, best);
        }
        ok
    }

    fn unplace(&mut self, problem: &Problem, e: usize) {
        let label = self.labels[e];
        self.labels[e] = 0;
        self.free |= 1 << (label - 1);
        let (vs, k) = problem.elements[e].touches();
        for &v in vs[..k].iter().rev() {
            if self.missing[v] == 0 {
                let w = self.weight[v].take().expect("final vertex");
                let at = self.colors.iter().position(|(c, _)| *c == w).expect("counted color");
                self.colors[at].1 -= 1;
                if self.colors[at].1 == 0 {
                    self.colors.swap_remove(at);
                }
            }
            self.partial[v] -= label;
            self.missing[v] += 1;
        }
    }

    /// With `best - 1` colors in use, every open vertex must land on an
    /// existing color. Checks that each open vertex's reachable weight range
    /// still contains one, and that a fully determined range does not tie
    /// a final neighbor.
    fn forced_overflow(&self, problem: &Problem, best: usize) -> bool {
        let tight = best != usize::MAX && self.colors.len() + 1 >= best;
        let free: Vec<u64> = (0..64).filter(|l| self.free >> l & 1 == 1).map(|l| l + 1).collect();
        for v in 0..problem.p {
            let k = self.missing[v];
            if k == 0 || k > free.len() {
                continue;
            }
            let lo = self.partial[v] + free[..k].iter().sum::<u64>();
            let hi = self.partial[v] + free[free.len() - k..].iter().sum::<u64>();
            if lo == hi && problem.adj[v].iter().any(|&u| self.weight[u] == Some(lo)) {
                return true;
            }
            if tight && !self.colors.iter().any(|&(c, _)| (lo..=hi).contains(&c)) {
                return true;
            }
        }
        false
    }

    fn leaf_colors(&self, problem: &Problem) -> Option<usize> {
        let proper = problem.adj.iter().enumerate().all(|(v, ns)| ns.iter().all(|&u| self.weight[u] != self.weight[v]));
        proper.then_some(self.colors.len())
    }
}

fn dfs(shared: &Shared<'_>, cur: &mut Cursor, pos: usize) {
    cur.nodes += 1;
    if cur.nodes.is_multiple_of(4096) {
        if let Some(d) = shared.deadline {
            if Instant::now() >= d {
                shared.timed_out.store(true, Ordering::SeqCst);
                shared.stop.store(true, Ordering::SeqCst);
            }
        }
    }
    if shared.stop.load(Ordering::Relaxed) {
        return;
    }
    let problem = shared.problem;
    let Some(&e) = problem.order.get(pos) else {
        if let Some(c) = cur.leaf_colors(problem) {
            if c < shared.best.load(Ordering::SeqCst) {
                shared.record(c, &cur.labels);
            }
        }
        return;
    };
    if cur.labels[e] != 0 {
        return dfs(shared, cur, pos + 1);
    }
    let mut free = cur.free;
    while free != 0 {
        let label = u64::from(free.trailing_zeros()) + 1;
        free &= free - 1;
        let best = shared.best.load(Ordering::Relaxed);
        if cur.place(problem, e, label, shared.lim.prune, best) {
            dfs(shared, cur, pos + 1);
        }
        cur.unplace(problem, e);
        if shared.stop.load(Ordering::Relaxed) {
            return;
        }
    }
}

fn search<G: Graph + ?Sized>(g: &G, kind: MatrixKind, lim: &SearchLimits) -> Result<OracleResult, OracleError> {
    let problem = Problem::new(g, kind);
    let n = problem.elements.len();
    if g.edge_list().is_empty() {
        return Err(OracleError::Degenerate);
    }
    if n > lim.max_elems || n > MAX_ELEMENTS {
        return Err(OracleError::TooLarge { elements: n, limit: lim.max_elems.min(MAX_ELEMENTS) });
    }
    let shared = Shared {
        problem: &problem,
        lim,
        best: AtomicUsize::new(usize::MAX),
        witness: Mutex::new(None),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        deadline: lim.time_budget.map(|d| Instant::now() + d),
    };

    // top level: where label 1 goes; second level: the first open element's label
    let firsts = if lim.symmetry { problem.orbit_representatives() } else { (0..n).collect() };
    let mut tasks = Vec::new();
    for &e1 in &firsts {
        let second = problem.order.iter().copied().find(|&e| e != e1);
        match second {
            Some(e2) => tasks.extend((2..=n as u64).map(|l| (e1, Some((e2, l))))),
            None => tasks.push((e1, None)),
        }
    }
    let run = |&(e1, second): &(usize, Option<(usize, u64)>)| {
        let mut cur = Cursor::new(&problem);
        let best = shared.best.load(Ordering::SeqCst);
        let mut ok = cur.place(&problem, e1, 1, lim.prune, best);
        if let (true, Some((e2, l))) = (ok, second) {
            ok = cur.place(&problem, e2, l, lim.prune, best);
        }
        if ok {
            dfs(&shared, &mut cur, 0);
        }
        shared.nodes.fetch_add(cur.nodes, Ordering::Relaxed);
    };
    if lim.jobs == 1 {
        tasks.iter().for_each(run);
    } else if lim.jobs == 0 {
        tasks.par_iter().for_each(run);
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(lim.jobs).build().expect("thread pool");
        pool.install(|| tasks.par_iter().for_each(run));
    }

    let best = shared.witness.into_inner().expect("witness lock");
    let timed_out = shared.timed_out.load(Ordering::SeqCst);
    let value = best.as_ref().map(|(c, _)| *c);
    let proven_exact = match value {
        Some(v) => {
            !timed_out && (lim.target.is_none() || v <= problem.lower_bound || !shared.stop.load(Ordering::SeqCst))
        }
        None => !timed_out,
    };
    Ok(OracleResult {
        value,
        witness: best.map(|(_, labels)| problem.labeling(&labels)),
        nodes: shared.nodes.load(Ordering::SeqCst),
        proven_exact,
    })
}
