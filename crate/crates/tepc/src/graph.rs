//! Undirected simple graphs with dense integer vertex ids, the generators for
//! the families the toolkit works on (paths, cycles, fans, wheels, the paw
//! graph), corona products, and a brute-force isomorphism check for small
//! graphs.
//!
//! Edges are stored smaller-id-first and iterated in lexicographic order, so
//! every graph has one canonical edge sequence. Labelings and bitmask search
//! both index edges by their position in that sequence.

use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Unordered edge, always normalized to `(smaller, larger)`.
pub type Edge = (VertexId, VertexId);

/// Largest vertex count accepted by [`isomorphic_small`].
pub const ISO_VERTEX_LIMIT: usize = 10;

/// Structural role of a vertex inside a generated family graph.
///
/// Indices are 1-based, matching the usual `u_i` / `v_j^i` naming for corona
/// products: `Spine(i)` is the i-th vertex of the base path, `Copy(i, j)` the
/// j-th vertex of the i-th attached copy. Fans and wheels use `Center` and
/// `Rim(j)`. Everything else is `Plain`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Spine(usize),
    Copy(usize, usize),
    Center,
    Rim(usize),
    Plain,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Spine(i) => write!(f, "spine({i})"),
            Role::Copy(i, j) => write!(f, "copy({i},{j})"),
            Role::Center => write!(f, "center"),
            Role::Rim(j) => write!(f, "rim({j})"),
            Role::Plain => write!(f, "plain"),
        }
    }
}

impl std::str::FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn args(s: &str, name: &str) -> Option<Vec<usize>> {
            let body = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
            body.split(',').map(|p| p.trim().parse().ok()).collect()
        }
        match s {
            "center" => return Ok(Role::Center),
            "plain" => return Ok(Role::Plain),
            _ => {}
        }
        if let Some(a) = args(s, "spine") {
            if let [i] = a[..] {
                return Ok(Role::Spine(i));
            }
        }
        if let Some(a) = args(s, "copy") {
            if let [i, j] = a[..] {
                return Ok(Role::Copy(i, j));
            }
        }
        if let Some(a) = args(s, "rim") {
            if let [j] = a[..] {
                return Ok(Role::Rim(j));
            }
        }
        Err(Error::Format(format!("unknown role tag {s:?}")))
    }
}

/// An undirected simple graph: no loops, no parallel edges, vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    roles: Vec<Role>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing endpoint order and
    /// sorting edges into the canonical lexicographic sequence.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "parallel edge ({},{})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            roles: vec![Role::Plain; vertex_count],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: each pair smaller-id-first, sorted
    /// lexicographically.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    pub fn role(&self, v: VertexId) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn set_role(&mut self, v: VertexId, role: Role) {
        self.roles[v] = role;
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Position of edge `{a, b}` in the canonical edge sequence.
    pub fn edge_index(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Multiset of vertex degrees, sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs = vec![0usize; self.vertex_count];
        for &(a, b) in &self.edges {
            degs[a] += 1;
            degs[b] += 1;
        }
        degs.sort_unstable_by(|x, y| y.cmp(x));
        degs
    }

    /// Structural identity used to bind labelings and search reports to the
    /// graph they were produced for. Covers vertex count and edge set; role
    /// tags are annotations and do not participate.
    pub fn fingerprint(&self) -> u64 {
        // FNV-1a, stable across runs and platforms.
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |x: usize| {
            for byte in (x as u64).to_le_bytes() {
                h = (h ^ u64::from(byte)).wrapping_mul(PRIME);
            }
        };
        eat(self.vertex_count);
        for &(a, b) in &self.edges {
            eat(a);
            eat(b);
        }
        h
    }

    /// True when the edge sequence is exactly `{(i, i+1)}` — the layout
    /// produced by [`build_path`].
    fn is_canonical_path(&self) -> bool {
        self.vertex_count >= 1
            && self.edges.len() == self.vertex_count - 1
            && self.edges.iter().enumerate().all(|(i, &e)| e == (i, i + 1))
    }

    /// True when the edge sequence is the canonical cycle layout of
    /// [`build_cycle`]: consecutive pairs plus the closing edge `(0, m-1)`.
    fn is_canonical_cycle(&self) -> bool {
        let m = self.vertex_count;
        m >= 3
            && self.edges.len() == m
            && (0..m - 1).all(|i| self.has_edge(i, i + 1))
            && self.has_edge(0, m - 1)
    }
}

/// Path `P_n` on vertices `0..n` with edges `(i, i+1)`.
pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// Cycle `C_m` on vertices `0..m`.
pub fn build_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter("cycle needs m >= 3".into()));
    }
    Graph::new(m, (0..m - 1).map(|i| (i, i + 1)).chain([(0, m - 1)]))
}

/// Fan `F_m`: path `1..=m` plus center `0` adjacent to every path vertex.
pub fn build_fan(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter("fan needs m >= 2".into()));
    }
    let spokes = (1..=m).map(|j| (0, j));
    let path = (1..m).map(|j| (j, j + 1));
    let mut g = Graph::new(m + 1, spokes.chain(path))?;
    g.set_role(0, Role::Center);
    for j in 1..=m {
        g.set_role(j, Role::Rim(j));
    }
    Ok(g)
}

/// Wheel `W_m`: cycle `1..=m` plus center `0` adjacent to every rim vertex.
pub fn build_wheel(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter("wheel needs m >= 3".into()));
    }
    let spokes = (1..=m).map(|j| (0, j));
    let rim = (1..m).map(|j| (j, j + 1)).chain([(1, m)]);
    let mut g = Graph::new(m + 1, spokes.chain(rim))?;
    g.set_role(0, Role::Center);
    for j in 1..=m {
        g.set_role(j, Role::Rim(j));
    }
    Ok(g)
}

/// The paw graph: a triangle with a pendant edge, the unique connected graph
/// with degree sequence (3,2,2,1).
pub fn build_paw() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).expect("paw edges are valid")
}

/// Index map for a corona product of a path with attached path or cycle
/// copies. All indices are 1-based: `u_i` for spine vertices, `v_j^i` for the
/// j-th vertex of the i-th copy.
///
/// Vertex ids are assigned spine-first (`u_1..u_n` are `0..n`), then copies in
/// order, so every accessor is plain index arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaLayout {
    n: usize,
    m: usize,
    closed: bool,
}

impl CoronaLayout {
    /// Spine length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Copy size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// True when the copies are cycles and [`CoronaLayout::closure_edge`] is
    /// available.
    pub fn has_closure(&self) -> bool {
        self.closed
    }

    pub fn vertex_count(&self) -> usize {
        self.n * (1 + self.m)
    }

    pub fn edge_count(&self) -> usize {
        let open = (self.n - 1) + self.n * self.m + self.n * (self.m - 1);
        if self.closed {
            open + self.n
        } else {
            open
        }
    }

    /// Vertex id of `u_i`, `1 <= i <= n`.
    pub fn spine_vertex(&self, i: usize) -> VertexId {
        assert!((1..=self.n).contains(&i), "spine index {i} out of 1..={}", self.n);
        i - 1
    }

    /// Vertex id of `v_j^i`, `1 <= i <= n`, `1 <= j <= m`.
    pub fn copy_vertex(&self, i: usize, j: usize) -> VertexId {
        assert!((1..=self.n).contains(&i), "copy index {i} out of 1..={}", self.n);
        assert!((1..=self.m).contains(&j), "position {j} out of 1..={}", self.m);
        self.n + (i - 1) * self.m + (j - 1)
    }

    /// Edge `u_i u_{i+1}`, `1 <= i <= n-1`.
    pub fn spine_edge(&self, i: usize) -> Edge {
        assert!(i >= 1 && i < self.n, "spine edge {i} out of 1..={}", self.n - 1);
        (self.spine_vertex(i), self.spine_vertex(i + 1))
    }

    /// Edge `u_i v_j^i`.
    pub fn link_edge(&self, i: usize, j: usize) -> Edge {
        (self.spine_vertex(i), self.copy_vertex(i, j))
    }

    /// Edge `v_j^i v_{j+1}^i`, `1 <= j <= m-1`.
    pub fn copy_edge(&self, i: usize, j: usize) -> Edge {
        assert!(j >= 1 && j < self.m, "copy edge {j} out of 1..={}", self.m - 1);
        (self.copy_vertex(i, j), self.copy_vertex(i, j + 1))
    }

    /// Edge `v_1^i v_m^i`, only for cycle copies.
    pub fn closure_edge(&self, i: usize) -> Edge {
        assert!(self.closed, "closure edges exist only for cycle copies");
        (self.copy_vertex(i, 1), self.copy_vertex(i, self.m))
    }
}

/// Corona product `g ∘ h`: one copy of `g`, `|V(g)|` disjoint copies of `h`,
/// and the i-th vertex of `g` joined to every vertex of the i-th copy.
///
/// Returns a [`CoronaLayout`] alongside the graph when `g` is a path and `h`
/// is a path or a cycle (in their canonical generator layouts); the layout is
/// what the constructive labelers address edges through.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, Option<CoronaLayout>)> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("corona base graph needs >= 1 vertex".into()));
    }
    let gn = g.vertex_count();
    let hn = h.vertex_count();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for i in 0..gn {
        let base = gn + i * hn;
        for &(a, b) in h.edges() {
            edges.push((base + a, base + b));
        }
        for v in 0..hn {
            edges.push((i, base + v));
        }
    }
    let mut product = Graph::new(gn * (1 + hn), edges)?;

    let layout = if g.is_canonical_path() && (h.is_canonical_path() || h.is_canonical_cycle()) {
        Some(CoronaLayout {
            n: gn,
            m: hn,
            closed: h.is_canonical_cycle(),
        })
    } else {
        None
    };
    if layout.is_some() {
        for i in 1..=gn {
            product.set_role(i - 1, Role::Spine(i));
            for j in 1..=hn {
                product.set_role(gn + (i - 1) * hn + (j - 1), Role::Copy(i, j));
            }
        }
    }
    Ok((product, layout))
}

/// Brute-force isomorphism test over all vertex bijections, for graphs with
/// at most [`ISO_VERTEX_LIMIT`] vertices.
pub fn isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    use itertools::Itertools;

    let n = g.vertex_count().max(h.vertex_count());
    if n > ISO_VERTEX_LIMIT {
        return Err(Error::UnsupportedSize {
            what: "isomorphism test vertex count",
            actual: n,
            limit: ISO_VERTEX_LIMIT,
        });
    }
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    // Adjacency bitmasks make the per-permutation check a shift and a mask.
    let adj = |gr: &Graph| {
        let mut rows = vec![0u16; gr.vertex_count()];
        for &(a, b) in gr.edges() {
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        rows
    };
    let adj_h = adj(h);
    let n = g.vertex_count();
    for perm in (0..n).permutations(n) {
        if g.edges()
            .iter()
            .all(|&(a, b)| adj_h[perm[a]] >> perm[b] & 1 == 1)
        {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_endpoints_and_sizes() {
        let p1 = build_path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));

        let p2 = build_path(2).unwrap();
        assert_eq!(p2.degree_sequence(), vec![1, 1]);

        let p5 = build_path(5).unwrap();
        assert_eq!((p5.vertex_count(), p5.edge_count()), (5, 4));
        assert_eq!(p5.degree_sequence(), vec![2, 2, 2, 1, 1]);

        assert!(matches!(build_path(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cycle_sizes_and_degrees() {
        let c3 = build_cycle(3).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));

        let c4 = build_cycle(4).unwrap();
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);

        let c5 = build_cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        assert!(matches!(build_cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn fan_and_wheel_shapes() {
        let f2 = build_fan(2).unwrap();
        assert_eq!((f2.vertex_count(), f2.edge_count()), (3, 3)); // K_3

        let w3 = build_wheel(3).unwrap();
        assert_eq!((w3.vertex_count(), w3.edge_count()), (4, 6)); // K_4

        let f4 = build_fan(4).unwrap();
        assert_eq!(f4.degree(0), 4);
        assert_eq!(f4.degree(1), 2);
        assert_eq!(f4.degree(4), 2);

        assert!(matches!(build_fan(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_wheel(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn paw_degree_sequence() {
        assert_eq!(build_paw().degree_sequence(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn graph_new_rejects_bad_edges() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::InvalidParameter(_))));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn corona_path_path_sizes() {
        let p3 = build_path(3).unwrap();
        let p2 = build_path(2).unwrap();
        let (g, layout) = corona(&p3, &p2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 11));
        let layout = layout.unwrap();
        assert_eq!((layout.n(), layout.m()), (3, 2));
        assert!(!layout.has_closure());
        assert_eq!(layout.edge_count(), g.edge_count());
    }

    #[test]
    fn corona_size_formulas() {
        for n in 1..=8 {
            let pn = build_path(n).unwrap();
            for m in 1..=8 {
                let pm = build_path(m).unwrap();
                let (g, layout) = corona(&pn, &pm).unwrap();
                assert_eq!(g.vertex_count(), n * (1 + m));
                assert_eq!(g.edge_count(), 2 * n * m - 1);
                assert!(layout.is_some());
            }
            for m in 3..=8 {
                let cm = build_cycle(m).unwrap();
                let (g, layout) = corona(&pn, &cm).unwrap();
                assert_eq!(g.vertex_count(), n * (1 + m));
                assert_eq!(g.edge_count(), 2 * n * m + n - 1);
                assert!(layout.unwrap().has_closure());
            }
        }
    }

    #[test]
    fn corona_without_layout() {
        let c3 = build_cycle(3).unwrap();
        let p2 = build_path(2).unwrap();
        let (g, layout) = corona(&c3, &p2).unwrap();
        assert!(layout.is_none());
        assert_eq!(g.vertex_count(), 9);
    }

    #[test]
    fn layout_accessors_are_injective() {
        let (g, layout) = corona(&build_path(3).unwrap(), &build_cycle(4).unwrap()).unwrap();
        let layout = layout.unwrap();
        let mut vertices = std::collections::BTreeSet::new();
        for i in 1..=3 {
            assert!(vertices.insert(layout.spine_vertex(i)));
            for j in 1..=4 {
                assert!(vertices.insert(layout.copy_vertex(i, j)));
            }
        }
        assert_eq!(vertices.len(), g.vertex_count());

        let mut edges = std::collections::BTreeSet::new();
        for i in 1..=2 {
            assert!(edges.insert(layout.spine_edge(i)));
        }
        for i in 1..=3 {
            assert!(edges.insert(layout.closure_edge(i)));
            for j in 1..=4 {
                assert!(edges.insert(layout.link_edge(i, j)));
            }
            for j in 1..=3 {
                assert!(edges.insert(layout.copy_edge(i, j)));
            }
        }
        assert_eq!(edges.len(), g.edge_count());
        for e in edges {
            assert!(g.has_edge(e.0, e.1));
        }
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in [
            build_path(6).unwrap(),
            build_cycle(5).unwrap(),
            build_fan(5).unwrap(),
            build_wheel(6).unwrap(),
            build_paw(),
        ] {
            let sum: usize = g.degree_sequence().iter().sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn fan_and_wheel_match_corona_bases() {
        for m in 2..=6 {
            let (g, _) = corona(&build_path(1).unwrap(), &build_path(m).unwrap()).unwrap();
            assert!(isomorphic_small(&g, &build_fan(m).unwrap()).unwrap());
        }
        for m in 3..=6 {
            let (g, _) = corona(&build_path(1).unwrap(), &build_cycle(m).unwrap()).unwrap();
            assert!(isomorphic_small(&g, &build_wheel(m).unwrap()).unwrap());
        }
    }

    #[test]
    fn iso_rejects_different_structures() {
        let c4 = build_cycle(4).unwrap();
        let p4 = build_path(4).unwrap();
        assert!(!isomorphic_small(&c4, &p4).unwrap());

        // Same degree sequence, different structure: C_6 vs two triangles.
        let c6 = build_cycle(6).unwrap();
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!isomorphic_small(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn iso_size_limit() {
        let big = build_path(11).unwrap();
        assert!(matches!(
            isomorphic_small(&big, &big),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn role_tags_round_trip() {
        for role in [
            Role::Spine(3),
            Role::Copy(2, 7),
            Role::Center,
            Role::Rim(4),
            Role::Plain,
        ] {
            let text = role.to_string();
            assert_eq!(text.parse::<Role>().unwrap(), role);
        }
        assert!("hub(1)".parse::<Role>().is_err());
        assert!("copy(1)".parse::<Role>().is_err());
    }

    #[test]
    fn fingerprint_ignores_roles() {
        let plain = build_wheel(4).unwrap();
        let mut tagged = plain.clone();
        tagged.set_role(0, Role::Plain);
        assert_eq!(plain.fingerprint(), tagged.fingerprint());
        assert_ne!(
            build_wheel(4).unwrap().fingerprint(),
            build_wheel(5).unwrap().fingerprint()
        );
    }
}
