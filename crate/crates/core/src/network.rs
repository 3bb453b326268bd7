//! Reaction networks: the `.crn` text format, the directed graph of
//! complexes, connectivity, and the matrix of exponent vectors.
//!
//! A network is a directed graph whose vertices are distinct complexes
//! (exponent vectors over the species) and whose edges are reactions,
//! optionally labeled with rate names. Labels are stored verbatim and
//! never interpreted numerically. The partition into connected
//! components of the underlying undirected graph is derived on
//! construction and kept consistent by every operation.

use std::collections::BTreeMap;
use std::fmt;

use crate::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl NetworkError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        NetworkError {
            line,
            column,
            message: message.into(),
        }
    }

    fn construction(message: impl Into<String>) -> Self {
        NetworkError::new(0, 0, message)
    }
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(
                f,
                "line {}, column {}: {}",
                self.line, self.column, self.message
            )
        } else {
            write!(f, "{}", self.message)
        }
    }
}

impl std::error::Error for NetworkError {}

/// A chemical reaction network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    species: Vec<String>,
    vertices: Vec<Vec<u32>>,
    edges: Vec<Edge>,
    partition: Vec<Vec<usize>>,
}

impl Network {
    /// Builds a network, validating indices and deriving the partition.
    /// Vertices must be pairwise distinct exponent vectors of length
    /// `species.len()`; self-loops are rejected.
    pub fn new(
        species: Vec<String>,
        vertices: Vec<Vec<u32>>,
        edges: Vec<Edge>,
    ) -> Result<Self, NetworkError> {
        let s = species.len();
        let n = vertices.len();
        for v in &vertices {
            if v.len() != s {
                return Err(NetworkError::construction(
                    "exponent vector length does not match species count",
                ));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(NetworkError::construction(format!(
                        "vertices {} and {} carry the same complex",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for e in &edges {
            if e.from >= n || e.to >= n {
                return Err(NetworkError::construction("edge endpoint out of range"));
            }
            if e.from == e.to {
                return Err(NetworkError::construction(format!(
                    "self-loop on vertex {}",
                    e.from + 1
                )));
            }
        }
        let partition = components(n, &edges);
        Ok(Network {
            species,
            vertices,
            edges,
            partition,
        })
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn num_species(&self) -> usize {
        self.species.len()
    }

    pub fn vertices(&self) -> &[Vec<u32>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Connected components of the underlying undirected graph, each
    /// block sorted ascending, blocks ordered by smallest vertex.
    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    pub fn num_components(&self) -> usize {
        self.partition.len()
    }

    /// Component index of each vertex.
    pub fn component_of(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.num_vertices()];
        for (k, block) in self.partition.iter().enumerate() {
            for &v in block {
                out[v] = k;
            }
        }
        out
    }

    /// Strongly connected components of the digraph, each sorted
    /// ascending, ordered by smallest contained vertex.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        let mut sccs = tarjan(&adj);
        for c in &mut sccs {
            c.sort_unstable();
        }
        sccs.sort_by_key(|c| c[0]);
        sccs
    }

    /// True iff every connected component is a single strongly connected
    /// component; isolated vertices count as trivially strong.
    pub fn is_weakly_reversible(&self) -> bool {
        let sccs = self.strongly_connected_components();
        let mut scc_of = vec![0usize; self.num_vertices()];
        for (k, c) in sccs.iter().enumerate() {
            for &v in c {
                scc_of[v] = k;
            }
        }
        self.partition
            .iter()
            .all(|block| block.iter().all(|&v| scc_of[v] == scc_of[block[0]]))
    }

    /// The s x n matrix of exponent vectors with columns renumbered so
    /// each partition block is contiguous. Returns the matrix and the
    /// permutation: entry c is the original vertex index of column c.
    pub fn y_matrix(&self) -> (IntegerMatrix, Vec<usize>) {
        let perm: Vec<usize> = self.partition.iter().flatten().copied().collect();
        let s = self.num_species();
        let mut m = IntegerMatrix::zero(s, perm.len());
        for (c, &v) in perm.iter().enumerate() {
            for r in 0..s {
                m.set(r, c, self.vertices[v][r].into());
            }
        }
        (m, perm)
    }

    /// New network with an extra directed edge; the partition is
    /// recomputed. Multi-edges are allowed, self-loops are not.
    pub fn add_edge(
        &self,
        from: usize,
        to: usize,
        label: Option<String>,
    ) -> Result<Network, NetworkError> {
        let mut edges = self.edges.clone();
        edges.push(Edge { from, to, label });
        Network::new(self.species.clone(), self.vertices.clone(), edges)
    }

    /// The monomial of a complex as text, e.g. `x1^2*x2`; `1` for the
    /// zero complex.
    pub fn complex_monomial(&self, vertex: usize) -> String {
        let v = &self.vertices[vertex];
        let mut parts = Vec::new();
        for (i, &e) in v.iter().enumerate() {
            if e == 1 {
                parts.push(format!("x{}", i + 1));
            } else if e > 1 {
                parts.push(format!("x{}^{}", i + 1, e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// The complex in reaction notation, e.g. `2A + B`; `0` when empty.
    pub fn complex_text(&self, vertex: usize) -> String {
        let v = &self.vertices[vertex];
        let mut parts = Vec::new();
        for (i, &e) in v.iter().enumerate() {
            if e == 1 {
                parts.push(self.species[i].clone());
            } else if e > 1 {
                parts.push(format!("{}{}", e, self.species[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Normalized `.crn` text; parsing it reproduces this network
    /// exactly (same species order, vertex order, and edge list).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.species.is_empty() {
            out.push_str("species: ");
            out.push_str(&self.species.join(", "));
            out.push('\n');
        }
        // Vertex order must survive the round trip. If scanning the edge
        // list first-appearance style does not reproduce it, declare
        // every complex on its own line first.
        let mut seen = vec![false; self.num_vertices()];
        let mut appearance = Vec::new();
        for e in &self.edges {
            for v in [e.from, e.to] {
                if !seen[v] {
                    seen[v] = true;
                    appearance.push(v);
                }
            }
        }
        if appearance != (0..self.num_vertices()).collect::<Vec<_>>() {
            for v in 0..self.num_vertices() {
                out.push_str(&self.complex_text(v));
                out.push('\n');
            }
        }
        for e in &self.edges {
            out.push_str(&self.complex_text(e.from));
            out.push_str(" -> ");
            out.push_str(&self.complex_text(e.to));
            if let Some(label) = &e.label {
                out.push(' ');
                out.push_str(label);
            }
            out.push('\n');
        }
        out
    }
}

/// Union-find connected components of the undirected graph.
fn components(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for e in edges {
        let a = find(&mut parent, e.from);
        let b = find(&mut parent, e.to);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        blocks.entry(root).or_default().push(v);
    }
    blocks.into_values().collect()
}

/// Iterative Tarjan; components come out in completion order.
fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut lowlink = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut sccs: Vec<Vec<usize>> = Vec::new();

    for start in 0..n {
        if index[start] != UNSET {
            continue;
        }
        // explicit DFS stack of (vertex, next child position)
        let mut call_stack: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some(&mut (v, ref mut child)) = call_stack.last_mut() {
            if *child == 0 {
                index[v] = next_index;
                lowlink[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *child < adj[v].len() {
                let w = adj[v][*child];
                *child += 1;
                if index[w] == UNSET {
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                continue;
            }
            call_stack.pop();
            if let Some(&mut (parent, _)) = call_stack.last_mut() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                sccs.push(component);
            }
        }
    }
    sccs
}

// ---------------------------------------------------------------------------
// .crn parsing
// ---------------------------------------------------------------------------

struct NetBuilder {
    species: Vec<String>,
    species_declared: bool,
    species_index: BTreeMap<String, usize>,
    vertices: Vec<Vec<u32>>,
    vertex_index: BTreeMap<Vec<u32>, usize>,
    edges: Vec<Edge>,
}

impl NetBuilder {
    fn new() -> Self {
        NetBuilder {
            species: Vec::new(),
            species_declared: false,
            species_index: BTreeMap::new(),
            vertices: Vec::new(),
            vertex_index: BTreeMap::new(),
            edges: Vec::new(),
        }
    }

    fn species_idx(&mut self, name: &str, line: usize, col: usize) -> Result<usize, NetworkError> {
        if let Some(&i) = self.species_index.get(name) {
            return Ok(i);
        }
        if self.species_declared {
            return Err(NetworkError::new(
                line,
                col,
                format!("species `{}` not in the declared species list", name),
            ));
        }
        let i = self.species.len();
        self.species.push(name.to_string());
        self.species_index.insert(name.to_string(), i);
        for v in &mut self.vertices {
            v.push(0);
        }
        self.vertex_index = self
            .vertices
            .iter()
            .enumerate()
            .map(|(idx, v)| (v.clone(), idx))
            .collect();
        Ok(i)
    }

    /// Registers a complex (padded to the current species count) and
    /// returns its vertex index; equal complexes merge to one vertex.
    fn vertex_idx(&mut self, mut complex: Vec<u32>) -> usize {
        complex.resize(self.species.len(), 0);
        if let Some(&i) = self.vertex_index.get(&complex) {
            return i;
        }
        let i = self.vertices.len();
        self.vertex_index.insert(complex.clone(), i);
        self.vertices.push(complex);
        i
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn skip_ws(chars: &[char], mut pos: usize) -> usize {
    while pos < chars.len() && chars[pos].is_whitespace() {
        pos += 1;
    }
    pos
}

/// Parses one complex (`0` or a sum of optionally-weighted species)
/// starting at `pos`; returns its exponent sums keyed by species index
/// and the position after it.
fn parse_complex(
    builder: &mut NetBuilder,
    chars: &[char],
    mut pos: usize,
    line_no: usize,
) -> Result<(Vec<u32>, usize), NetworkError> {
    let mut sums: BTreeMap<usize, u32> = BTreeMap::new();
    let mut first = true;
    loop {
        pos = skip_ws(chars, pos);
        if pos >= chars.len() {
            return Err(NetworkError::new(line_no, pos + 1, "expected a complex"));
        }
        let mut coef: u32 = 1;
        let mut have_coef = false;
        if chars[pos].is_ascii_digit() {
            let d0 = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos < chars.len() && chars[pos] == '.' {
                return Err(NetworkError::new(
                    line_no,
                    d0 + 1,
                    "fractional stoichiometric coefficient",
                ));
            }
            let digits: String = chars[d0..pos].iter().collect();
            let value: u64 = digits.parse().map_err(|_| {
                NetworkError::new(line_no, d0 + 1, "stoichiometric coefficient out of range")
            })?;
            pos = skip_ws(chars, pos);
            let species_follows = pos < chars.len() && is_ident_start(chars[pos]);
            if !species_follows {
                if value == 0 && first {
                    // the zero complex stands alone
                    let s = builder.species.len();
                    return Ok((vec![0; s], pos));
                }
                return Err(NetworkError::new(
                    line_no,
                    pos + 1,
                    "expected species name after coefficient",
                ));
            }
            if value == 0 {
                return Err(NetworkError::new(
                    line_no,
                    d0 + 1,
                    "stoichiometric coefficient must be a positive integer",
                ));
            }
            coef = u32::try_from(value).map_err(|_| {
                NetworkError::new(line_no, d0 + 1, "stoichiometric coefficient out of range")
            })?;
            have_coef = true;
        } else if chars[pos] == '-' {
            return Err(NetworkError::new(
                line_no,
                pos + 1,
                "negative stoichiometric coefficient",
            ));
        }
        let _ = have_coef;
        if pos >= chars.len() || !is_ident_start(chars[pos]) {
            return Err(NetworkError::new(line_no, pos + 1, "expected species name"));
        }
        let n0 = pos;
        while pos < chars.len() && is_ident_char(chars[pos]) {
            pos += 1;
        }
        let name: String = chars[n0..pos].iter().collect();
        let idx = builder.species_idx(&name, line_no, n0 + 1)?;
        *sums.entry(idx).or_insert(0) += coef;

        pos = skip_ws(chars, pos);
        if pos < chars.len() && chars[pos] == '+' {
            pos += 1;
            first = false;
            continue;
        }
        break;
    }
    let s = builder.species.len();
    let mut v = vec![0u32; s];
    for (i, e) in sums {
        v[i] = e;
    }
    Ok((v, pos))
}

/// Parses the `.crn` reaction network format.
///
/// Lines: an optional `species: A, B, C` header, reactions
/// `complex -> complex [label]` / `complex <-> complex [label, label]`,
/// or a bare complex, which declares an isolated vertex. `#` starts a
/// comment; blank lines are skipped.
pub fn parse_network(text: &str) -> Result<Network, NetworkError> {
    let mut builder = NetBuilder::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("species:") {
            if builder.species_declared || !builder.species.is_empty() {
                return Err(NetworkError::new(
                    line_no,
                    1,
                    "species header must appear once, before any reaction",
                ));
            }
            for name in rest.split(',') {
                let name = name.trim();
                if name.is_empty() {
                    return Err(NetworkError::new(line_no, 1, "empty species name"));
                }
                if !name.chars().next().map(is_ident_start).unwrap_or(false)
                    || !name.chars().all(is_ident_char)
                {
                    return Err(NetworkError::new(
                        line_no,
                        1,
                        format!("invalid species name `{}`", name),
                    ));
                }
                if builder.species_index.contains_key(name) {
                    return Err(NetworkError::new(
                        line_no,
                        1,
                        format!("species `{}` declared twice", name),
                    ));
                }
                let i = builder.species.len();
                builder.species.push(name.to_string());
                builder.species_index.insert(name.to_string(), i);
            }
            builder.species_declared = true;
            continue;
        }

        let chars: Vec<char> = line.chars().collect();
        let (lhs, mut pos) = parse_complex(&mut builder, &chars, 0, line_no)?;
        pos = skip_ws(chars.as_slice(), pos);
        if pos >= chars.len() {
            // bare complex: an isolated vertex
            builder.vertex_idx(lhs);
            continue;
        }
        let reversible = if chars[pos..].starts_with(&['<', '-', '>']) {
            pos += 3;
            true
        } else if chars[pos..].starts_with(&['-', '>']) {
            pos += 2;
            false
        } else {
            return Err(NetworkError::new(line_no, pos + 1, "expected `->` or `<->`"));
        };
        let (rhs, mut pos) = parse_complex(&mut builder, &chars, pos, line_no)?;
        pos = skip_ws(chars.as_slice(), pos);
        let mut labels: Vec<String> = Vec::new();
        if pos < chars.len() {
            let rest: String = chars[pos..].iter().collect();
            for (li, piece) in rest.split(',').enumerate() {
                let label = piece.trim();
                if label.is_empty() {
                    return Err(NetworkError::new(line_no, pos + 1, "empty rate label"));
                }
                if li >= 2 {
                    return Err(NetworkError::new(line_no, pos + 1, "too many rate labels"));
                }
                labels.push(label.to_string());
            }
        }
        if !reversible && labels.len() > 1 {
            return Err(NetworkError::new(
                line_no,
                pos + 1,
                "duplicate rate label on one edge",
            ));
        }
        let from = builder.vertex_idx(lhs);
        let to = builder.vertex_idx(rhs);
        if from == to {
            return Err(NetworkError::new(
                line_no,
                1,
                "reaction relates a complex to itself",
            ));
        }
        builder.edges.push(Edge {
            from,
            to,
            label: labels.first().cloned(),
        });
        if reversible {
            builder.edges.push(Edge {
                from: to,
                to: from,
                label: labels.get(1).cloned(),
            });
        }
    }
    Network::new(builder.species, builder.vertices, builder.edges)
}
