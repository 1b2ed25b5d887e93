//! Labelled graphs: the finite presentations of sofic subshifts.
//!
//! Vertices and letters are opaque tokens; internally everything is indexed
//! by position in first-appearance order, and edges are stored once per
//! distinct `(source, label, target)` triple.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

impl Edge {
    pub fn new(source: usize, label: usize, target: usize) -> Self {
        Edge { source, label, target }
    }
}

/// A finite multidigraph whose edges carry letters of a finite alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    alphabet: Vec<String>,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

fn check_tokens(tokens: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(tokens.len());
    for t in tokens {
        if t.is_empty() || t.chars().any(char::is_whitespace) {
            return Err(Error::InvalidToken(t.clone()));
        }
        if !seen.insert(t.as_str()) {
            return Err(Error::DuplicateToken(t.clone()));
        }
    }
    Ok(())
}

impl LabelledGraph {
    /// Builds a graph from index triples. Repeated triples are stored once.
    pub fn from_indexed<A, V, E>(alphabet: A, vertices: V, edges: E) -> Result<Self>
    where
        A: IntoIterator,
        A::Item: Into<String>,
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = Edge>,
    {
        let alphabet: Vec<String> = alphabet.into_iter().map(Into::into).collect();
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        check_tokens(&alphabet)?;
        check_tokens(&vertices)?;
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for e in edges {
            if e.source >= vertices.len() {
                return Err(Error::VertexOutOfRange(e.source));
            }
            if e.target >= vertices.len() {
                return Err(Error::VertexOutOfRange(e.target));
            }
            if e.label >= alphabet.len() {
                return Err(Error::Precondition(format!("letter index {} is out of range", e.label)));
            }
            if seen.insert(e) {
                kept.push(e);
            }
        }
        Ok(Self::assemble(alphabet, vertices, kept))
    }

    /// Builds a graph from named `(source, label, target)` triples.
    pub fn from_named<A, V, S>(alphabet: A, vertices: V, edges: &[(S, S, S)]) -> Result<Self>
    where
        A: IntoIterator,
        A::Item: Into<String>,
        V: IntoIterator,
        V::Item: Into<String>,
        S: AsRef<str>,
    {
        let alphabet: Vec<String> = alphabet.into_iter().map(Into::into).collect();
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let vertex = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex { line: 0, name: name.to_string() })
        };
        let letter = |name: &str| {
            alphabet
                .iter()
                .position(|a| a == name)
                .ok_or_else(|| Error::UnknownLetter { line: 0, name: name.to_string() })
        };
        let indexed = edges
            .iter()
            .map(|(s, a, t)| Ok(Edge::new(vertex(s.as_ref())?, letter(a.as_ref())?, vertex(t.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indexed(alphabet, vertices, indexed)
    }

    fn assemble(alphabet: Vec<String>, vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.source].push(i);
            in_edges[e.target].push(i);
        }
        LabelledGraph { alphabet, vertices, edges, out_edges, in_edges }
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn letter_name(&self, a: usize) -> &str {
        &self.alphabet[a]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == name)
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.out_edges[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.in_edges[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    /// Successor lists, one per vertex, possibly with repeats.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.out_edges(v).map(|e| e.target).collect()).collect()
    }

    /// Translates letter tokens to indices. `None` if a token is not a letter.
    pub fn encode_word<S: AsRef<str>>(&self, word: &[S]) -> Option<Vec<usize>> {
        word.iter().map(|s| self.letter_index(s.as_ref())).collect()
    }

    /// Spells a word of letter indices. Single-character alphabets are
    /// concatenated, anything else is space separated.
    pub fn spell(&self, word: &[usize]) -> String {
        let compact = self.alphabet.iter().all(|a| a.chars().count() == 1);
        let letters = word.iter().map(|&a| self.alphabet[a].as_str());
        if compact {
            letters.collect()
        } else {
            letters.collect::<Vec<_>>().join(" ")
        }
    }

    /// The subgraph induced by the vertices with `keep[v]` set. Alphabet and
    /// relative vertex order are preserved.
    pub fn induced(&self, keep: &[bool]) -> LabelledGraph {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut vertices = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            if keep[v] {
                new_index[v] = vertices.len();
                vertices.push(name.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.source] && keep[e.target])
            .map(|e| Edge::new(new_index[e.source], e.label, new_index[e.target]))
            .collect();
        Self::assemble(self.alphabet.clone(), vertices, edges)
    }

    /// Vertices lacking an incoming or an outgoing edge.
    pub fn stranded(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.in_degree(v) == 0 || self.out_degree(v) == 0).collect()
    }

    pub fn is_essential(&self) -> bool {
        self.stranded().is_empty()
    }

    /// Fails with the first stranded vertex, or on an empty graph.
    pub(crate) fn require_essential(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        match self.stranded().first() {
            Some(&v) => Err(Error::NotEssential(self.vertices[v].clone())),
            None => Ok(()),
        }
    }
}

/// Parses the line-oriented graph format.
///
/// ```text
/// # comment
/// alphabet: a b
/// vertices: p q
/// edge: p a q
/// edge: q b p
/// ```
pub fn parse_graph(text: &str) -> Result<LabelledGraph> {
    let mut alphabet: Option<Vec<String>> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut edges = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = |message: String| Error::Syntax { line, message };
        let (keyword, rest) =
            trimmed.split_once(':').ok_or_else(|| syntax(format!("expected `keyword: ...`, found `{trimmed}`")))?;
        let tokens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        match keyword.trim() {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax("second alphabet line".into()));
                }
                if !edges.is_empty() {
                    return Err(syntax("alphabet line after an edge line".into()));
                }
                if tokens.is_empty() {
                    return Err(Error::EmptyAlphabet);
                }
                check_tokens(&tokens).map_err(|e| syntax(e.to_string()))?;
                alphabet = Some(tokens);
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax("second vertices line".into()));
                }
                if !edges.is_empty() {
                    return Err(syntax("vertices line after an edge line".into()));
                }
                if tokens.is_empty() {
                    return Err(Error::EmptyVertexSet);
                }
                check_tokens(&tokens).map_err(|e| syntax(e.to_string()))?;
                vertices = Some(tokens);
            }
            "edge" => {
                let (Some(alphabet), Some(vertices)) = (&alphabet, &vertices) else {
                    return Err(syntax("edge line before the alphabet and vertices lines".into()));
                };
                let [src, label, dst] = tokens.as_slice() else {
                    return Err(syntax(format!(
                        "an edge needs exactly 3 tokens (SRC LABEL DST), found {}",
                        tokens.len()
                    )));
                };
                let vertex = |name: &String| {
                    vertices
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| Error::UnknownVertex { line, name: name.clone() })
                };
                let letter = alphabet
                    .iter()
                    .position(|a| a == label)
                    .ok_or_else(|| Error::UnknownLetter { line, name: label.clone() })?;
                edges.push(Edge::new(vertex(src)?, letter, vertex(dst)?));
            }
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }

    let alphabet = alphabet.ok_or(Error::EmptyAlphabet)?;
    let vertices = vertices.ok_or(Error::EmptyVertexSet)?;
    LabelledGraph::from_indexed(alphabet, vertices, edges)
}

impl FromStr for LabelledGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Writes the graph back in the format accepted by [`parse_graph`].
impl fmt::Display for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet.join(" "))?;
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for e in &self.edges {
            writeln!(f, "edge: {} {} {}", self.vertices[e.source], self.alphabet[e.label], self.vertices[e.target])?;
        }
        Ok(())
    }
}

/// The maximal essential subgraph: stranded vertices are removed until none
/// remain. The result may be empty.
pub fn essentialize(g: &LabelledGraph) -> LabelledGraph {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
    let mut outdeg: Vec<usize> = (0..n).map(|v| g.out_degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for e in g.out_edges(v) {
            if alive[e.target] {
                indeg[e.target] -= 1;
                if indeg[e.target] == 0 {
                    queue.push(e.target);
                }
            }
        }
        for e in g.in_edges(v) {
            if alive[e.source] {
                outdeg[e.source] -= 1;
                if outdeg[e.source] == 0 {
                    queue.push(e.source);
                }
            }
        }
    }
    g.induced(&alive)
}

/// True iff no edge leaves `set`. Indices outside the graph are ignored.
pub fn is_terminal(g: &LabelledGraph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        if v < inside.len() {
            inside[v] = true;
        }
    }
    g.edges().iter().all(|e| !inside[e.source] || inside[e.target])
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz text for `g`. Highlighted vertices are drawn filled.
pub fn export_dot(g: &LabelledGraph, highlight: Option<&[usize]>) -> String {
    let mut marked = vec![false; g.vertex_count()];
    for &v in highlight.unwrap_or(&[]) {
        if v < marked.len() {
            marked[v] = true;
        }
    }
    let mut out = String::from("digraph G {\n  rankdir=LR;\n");
    for (v, name) in g.vertices().iter().enumerate() {
        if marked[v] {
            out.push_str(&format!("  {} [style=filled, fillcolor=gold];\n", dot_quote(name)));
        } else {
            out.push_str(&format!("  {};\n", dot_quote(name)));
        }
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            dot_quote(g.vertex_name(e.source)),
            dot_quote(g.vertex_name(e.target)),
            dot_quote(g.letter_name(e.label))
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: &str = "alphabet: a\nvertices: q\nedge: q a q\n";
    const E2: &str = "alphabet: a b\nvertices: p q\nedge: p a q\nedge: q b p\n";
    const E5: &str = "alphabet: a b c\nvertices: u v\nedge: u a u\nedge: u c v\nedge: v b v\n";

    #[test]
    fn parses_smallest_graph() {
        let g = parse_graph(E1).unwrap();
        assert_eq!(g.alphabet(), ["a"]);
        assert_eq!(g.vertices(), ["q"]);
        assert_eq!(g.edges(), [Edge::new(0, 0, 0)]);
    }

    #[test]
    fn parses_two_cycle() {
        let g = parse_graph(E2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), [Edge::new(0, 0, 1), Edge::new(1, 1, 0)]);
    }

    #[test]
    fn undeclared_vertex_names_line() {
        let err = parse_graph("alphabet: a\nvertices: p q\n\nedge: p a r\n").unwrap_err();
        assert_eq!(err, Error::UnknownVertex { line: 4, name: "r".into() });
        assert!(err.to_string().contains("line 4"));
        assert!(err.to_string().contains('r'));
    }

    #[test]
    fn unknown_letter() {
        let err = parse_graph("alphabet: a\nvertices: p\nedge: p b p\n").unwrap_err();
        assert_eq!(err, Error::UnknownLetter { line: 3, name: "b".into() });
    }

    #[test]
    fn empty_headers_rejected() {
        assert_eq!(parse_graph("alphabet:\nvertices: p\n"), Err(Error::EmptyAlphabet));
        assert_eq!(parse_graph("alphabet: a\nvertices:\n"), Err(Error::EmptyVertexSet));
        assert_eq!(parse_graph("vertices: p\n"), Err(Error::EmptyAlphabet));
        assert_eq!(parse_graph(""), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let cases = [
            ("alphabet: a\nvertices: p\nedge: p a\n", 3),
            ("alphabet: a\nalphabet: b\n", 2),
            ("alphabet: a\nvertices: p\nedge: p a p\nvertices: q\n", 4),
            ("edge: p a p\n", 1),
            ("alphabet: a\nfoo: bar\n", 2),
            ("alphabet a\n", 1),
            ("alphabet: a a\n", 1),
        ];
        for (text, want) in cases {
            match parse_graph(text) {
                Err(Error::Syntax { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn comments_tabs_and_duplicates() {
        let g = parse_graph("# x\n\nalphabet:\ta  b\nvertices: p\n edge: p\ta p\nedge: p a p\n").unwrap();
        assert_eq!(g.alphabet(), ["a", "b"]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn display_round_trips() {
        let g = parse_graph(E5).unwrap();
        assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn essentialize_examples() {
        let e1 = parse_graph(E1).unwrap();
        assert_eq!(essentialize(&e1), e1);
        let path = parse_graph("alphabet: a\nvertices: p q\nedge: p a q\n").unwrap();
        let ess = essentialize(&path);
        assert!(ess.is_empty());
        assert_eq!(ess.alphabet(), ["a"]);
        let e5 = parse_graph(E5).unwrap();
        assert_eq!(essentialize(&e5), e5);
    }

    #[test]
    fn essentialize_cascades_from_both_ends() {
        // s -> u (loop) -> t ; s has no in-edge, t no out-edge
        let g = LabelledGraph::from_named(["a"], ["s", "u", "t"], &[("s", "a", "u"), ("u", "a", "u"), ("u", "a", "t")])
            .unwrap();
        let ess = essentialize(&g);
        assert_eq!(ess.vertices(), ["u"]);
        assert_eq!(ess.edges(), [Edge::new(0, 0, 0)]);
    }

    #[test]
    fn terminal_sets() {
        let e5 = parse_graph(E5).unwrap();
        assert!(is_terminal(&e5, &[1]));
        assert!(!is_terminal(&e5, &[0]));
        assert!(is_terminal(&e5, &[0, 1]));
        assert!(is_terminal(&e5, &[]));
    }

    #[test]
    fn dot_output() {
        let e1 = parse_graph(E1).unwrap();
        let dot = export_dot(&e1, None);
        assert!(dot.starts_with("digraph G {"));
        assert!(dot.contains("\"q\" -> \"q\" [label=\"a\"];"));
        assert_eq!(dot.matches("->").count(), 1);

        let e2 = parse_graph(E2).unwrap();
        let dot = export_dot(&e2, Some(&[0]));
        assert!(dot.contains("\"p\" [style=filled, fillcolor=gold];"));
        assert!(dot.contains("  \"q\";\n"));

        let empty = essentialize(&parse_graph("alphabet: a\nvertices: p\n").unwrap());
        assert_eq!(export_dot(&empty, None), "digraph G {\n  rankdir=LR;\n}\n");
    }

    #[test]
    fn dot_escapes_quotes() {
        let g = LabelledGraph::from_named(["x"], ["a\"b"], &[("a\"b", "x", "a\"b")]).unwrap();
        assert!(export_dot(&g, None).contains("\"a\\\"b\""));
    }

    #[test]
    fn spelled_words() {
        let g = parse_graph(E2).unwrap();
        assert_eq!(g.spell(&[0, 1, 0]), "aba");
        assert_eq!(g.encode_word(&["a", "b"]), Some(vec![0, 1]));
        assert_eq!(g.encode_word(&["c"]), None);
        let long = LabelledGraph::from_named(["ab", "c"], ["p"], &[("p", "ab", "p")]).unwrap();
        assert_eq!(long.spell(&[0, 1]), "ab c");
    }
}
