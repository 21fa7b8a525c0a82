//! JSON wire formats. Identifiers are emitted as strings; on input, integer
//! identifiers are accepted and read as their decimal spelling. Unknown
//! fields are ignored, so annotated outputs (a dual with its
//! correspondence, say) remain valid hypergraph inputs.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::beta::{BetaSequence, CycleEnumeration, Item, SequenceKind};
use crate::error::{Error, Result};
use crate::hypergraph::{Dual, Hypergraph, Isomorphism, ValidationReport};
use crate::labeling::{Labeling, Target};
use crate::pathsearch::LoosePath;
use crate::properties::{DualityCheck, PeelResult};
use crate::skeleton::{components, CycleCertificate, GeneratorSet, SkeletonGraph, WitnessExtraction};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn id(value: &Value, what: &str) -> Result<String> {
    match value {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(parse_err(format!("{what}: expected a string or integer, found {other}"))),
    }
}

fn array<'a>(value: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| parse_err(format!("{what}: expected an array")))
}

fn object<'a>(value: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| parse_err(format!("{what}: expected an object")))
}

pub fn parse_str(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(Error::from)
}

// Hypergraph

/// `{"vertices": [...], "edges": [[...], ...], "edge_names": [...]?}`. When
/// `vertices` is absent the vertex set is the union of the edges.
pub fn parse_hypergraph(value: &Value) -> Result<Hypergraph> {
    let obj = object(value, "hypergraph")?;
    let edges = obj
        .get("edges")
        .ok_or_else(|| parse_err("hypergraph: missing field `edges`"))?;
    let edges: Vec<Vec<String>> = array(edges, "edges")?
        .iter()
        .map(|e| array(e, "edge")?.iter().map(|v| id(v, "vertex")).collect())
        .collect::<Result<_>>()?;
    let names = match obj.get("edge_names") {
        None | Some(Value::Null) => None,
        Some(v) => Some(
            array(v, "edge_names")?
                .iter()
                .map(|n| id(n, "edge name"))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    match obj.get("vertices") {
        None | Some(Value::Null) => {
            let h = Hypergraph::from_edges(&edges)?;
            match names {
                None => Ok(h),
                Some(names) => Hypergraph::from_indices(
                    h.vertex_names().to_vec(),
                    h.edges().to_vec(),
                    Some(names),
                ),
            }
        }
        Some(v) => {
            let vertices: Vec<String> = array(v, "vertices")?
                .iter()
                .map(|v| id(v, "vertex"))
                .collect::<Result<_>>()?;
            Hypergraph::new(&vertices, &edges, names)
        }
    }
}

pub fn hypergraph_to_json(h: &Hypergraph) -> Value {
    let edges: Vec<Vec<&str>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| h.vertex_name(v)).collect())
        .collect();
    json!({
        "vertices": h.vertex_names(),
        "edges": edges,
        "edge_names": h.edge_names(),
    })
}

pub fn validation_to_json(h: &Hypergraph, report: &ValidationReport) -> Value {
    let uniformity: Vec<Value> = report
        .uniformity
        .iter()
        .map(|u| json!({"edge": h.edge_name(u.edge), "size": u.size}))
        .collect();
    let linearity: Vec<Value> = report
        .linearity
        .iter()
        .map(|l| {
            json!({
                "edges": [h.edge_name(l.first), h.edge_name(l.second)],
                "shared": names(h, &l.shared),
            })
        })
        .collect();
    json!({"ok": report.is_ok(), "uniformity": uniformity, "linearity": linearity})
}

/// The dual hypergraph, plus `"correspondence"` mapping each original
/// vertex to its dual edge and each original edge to its dual vertex.
pub fn dual_to_json(h: &Hypergraph, d: &Dual) -> Value {
    let mut out = hypergraph_to_json(&d.hypergraph);
    let vertices: BTreeMap<&str, &str> = (0..h.vertex_count())
        .map(|v| (h.vertex_name(v), d.hypergraph.edge_name(d.correspondence.dual_edge(v))))
        .collect();
    let edges: BTreeMap<&str, &str> = (0..h.edge_count())
        .map(|e| (h.edge_name(e), d.hypergraph.vertex_name(d.correspondence.dual_vertex(e))))
        .collect();
    out["correspondence"] = json!({"vertices": vertices, "edges": edges});
    out
}

/// The double dual, plus `"isomorphism"` mapping original identifiers to
/// double-dual identifiers.
pub fn isomorphism_to_json(h: &Hypergraph, iso: &Isomorphism) -> Value {
    let dd = &iso.double_dual;
    let mut out = hypergraph_to_json(dd);
    let vertices: BTreeMap<&str, &str> = (0..h.vertex_count())
        .map(|v| (h.vertex_name(v), dd.vertex_name(iso.vertex_map[v])))
        .collect();
    let edges: BTreeMap<&str, &str> = (0..h.edge_count())
        .map(|e| (h.edge_name(e), dd.edge_name(iso.edge_map[e])))
        .collect();
    out["isomorphism"] = json!({"vertices": vertices, "edges": edges});
    out
}

fn names<'a>(h: &'a Hypergraph, vertices: &[usize]) -> Vec<&'a str> {
    vertices.iter().map(|&v| h.vertex_name(v)).collect()
}

fn edge_names<'a>(h: &'a Hypergraph, edges: &[usize]) -> Vec<&'a str> {
    edges.iter().map(|&e| h.edge_name(e)).collect()
}

// Sequences

/// `{"kind": "path"|"cycle", "items": ["v:a", "e:0", ...]}`. Edges may be
/// referenced by name or index. `kind` defaults to `path`.
pub fn parse_sequence(h: &Hypergraph, value: &Value) -> Result<BetaSequence> {
    let obj = object(value, "sequence")?;
    let kind = match obj.get("kind").map(|k| k.as_str()) {
        None | Some(Some("path")) => SequenceKind::Path,
        Some(Some("cycle")) => SequenceKind::Cycle,
        Some(_) => return Err(parse_err("sequence: `kind` must be \"path\" or \"cycle\"")),
    };
    let raw = obj
        .get("items")
        .ok_or_else(|| parse_err("sequence: missing field `items`"))?;
    let mut items = Vec::new();
    for item in array(raw, "items")? {
        let text = id(item, "item")?;
        let parsed = if let Some(v) = text.strip_prefix("v:") {
            Item::Vertex(h.vertex(v)?)
        } else if let Some(e) = text.strip_prefix("e:") {
            Item::Edge(h.edge_ref(e)?)
        } else {
            return Err(parse_err(format!("item `{text}` lacks a `v:` or `e:` prefix")));
        };
        items.push(parsed);
    }
    BetaSequence::from_items(kind, &items)
}

pub fn sequence_to_json(h: &Hypergraph, s: &BetaSequence) -> Value {
    let items: Vec<String> = s
        .items()
        .into_iter()
        .map(|item| match item {
            Item::Vertex(v) => format!("v:{}", h.vertex_name(v)),
            Item::Edge(e) => format!("e:{}", h.edge_name(e)),
        })
        .collect();
    let kind = match s.kind() {
        SequenceKind::Path => "path",
        SequenceKind::Cycle => "cycle",
    };
    json!({"kind": kind, "items": items})
}

pub fn cycles_to_json(h: &Hypergraph, found: &CycleEnumeration) -> Value {
    let cycles: Vec<Value> = found
        .cycles
        .iter()
        .map(|c| sequence_to_json(h, &c.to_sequence()))
        .collect();
    json!({"count": cycles.len(), "truncated": found.truncated, "cycles": cycles})
}

// Properties

pub fn peel_to_json(h: &Hypergraph, r: &PeelResult) -> Value {
    let name = |i: usize| match r.element {
        crate::properties::Element::Vertices => h.vertex_name(i),
        crate::properties::Element::Edges => h.edge_name(i),
    };
    let witness: Vec<&str> = r.witness.iter().map(|&i| name(i)).collect();
    let counts: Map<String, Value> = r
        .counts
        .iter()
        .map(|(&i, &c)| (name(i).to_string(), json!(c)))
        .collect();
    let trace: Vec<Value> = r
        .trace
        .iter()
        .map(|round| {
            let removed: Vec<&str> = round.removed.iter().map(|&i| name(i)).collect();
            json!({"round": round.round, "removed": removed})
        })
        .collect();
    let mut out = json!({"witness": witness, "counts": counts, "trace": trace});
    if !r.warnings.is_empty() {
        out["warnings"] = json!(r.warnings);
    }
    out
}

pub fn duality_to_json(dual: &Hypergraph, check: &DualityCheck) -> Value {
    json!({
        "holds": check.holds,
        "mapped_witness": edge_names(dual, &check.mapped_witness),
        "dual_witness": edge_names(dual, &check.dual_witness),
    })
}

// Skeleton

/// `{"pairs": [["v", 0], ...], "roots": {"component0": "v"}}`. Edges in
/// pairs are written as indices and read as indices or names. Components
/// are numbered by their least vertex index.
pub fn parse_generator_set(h: &Hypergraph, value: &Value) -> Result<GeneratorSet> {
    let obj = object(value, "generator set")?;
    let raw = obj
        .get("pairs")
        .ok_or_else(|| parse_err("generator set: missing field `pairs`"))?;
    let mut pairs = Vec::new();
    for pair in array(raw, "pairs")? {
        let pair = array(pair, "pair")?;
        if pair.len() != 2 {
            return Err(parse_err("pair: expected [vertex, edge]"));
        }
        let v = h.vertex(&id(&pair[0], "vertex")?)?;
        let e = h.edge_ref(&id(&pair[1], "edge")?)?;
        pairs.push((v, e));
    }
    let mut roots = BTreeMap::new();
    if let Some(raw) = obj.get("roots") {
        let count = components(h).len();
        for (key, root) in object(raw, "roots")? {
            let c: usize = key
                .strip_prefix("component")
                .and_then(|c| c.parse().ok())
                .filter(|&c| c < count)
                .ok_or_else(|| parse_err(format!("roots: bad component key `{key}`")))?;
            roots.insert(c, h.vertex(&id(root, "root")?)?);
        }
    }
    Ok(GeneratorSet::new(pairs).with_roots(roots))
}

pub fn generator_set_to_json(h: &Hypergraph, t: &GeneratorSet) -> Value {
    let pairs: Vec<Value> = t
        .pairs()
        .iter()
        .map(|&(v, e)| json!([h.vertex_name(v), e]))
        .collect();
    let roots: Map<String, Value> = t
        .roots()
        .iter()
        .map(|(&c, &v)| (format!("component{c}"), json!(h.vertex_name(v))))
        .collect();
    json!({"pairs": pairs, "roots": roots})
}

pub fn skeleton_to_json(h: &Hypergraph, g: &SkeletonGraph) -> Value {
    let edges: Vec<[&str; 2]> = g
        .edges
        .iter()
        .map(|&(a, b)| [h.vertex_name(a), h.vertex_name(b)])
        .collect();
    json!({"vertices": h.vertex_names(), "edges": edges})
}

pub fn certificates_to_json(h: &Hypergraph, certs: &[CycleCertificate]) -> Value {
    let list: Vec<Value> = certs
        .iter()
        .map(|c| {
            json!({
                "pair": [h.vertex_name(c.first), h.vertex_name(c.second)],
                "cycle": sequence_to_json(h, &c.cycle),
            })
        })
        .collect();
    json!({"count": list.len(), "certificates": list})
}

pub fn extraction_to_json(h: &Hypergraph, w: &WitnessExtraction) -> Value {
    let claims: Map<String, Value> = w
        .claims
        .iter()
        .map(|(&v, &ok)| (h.vertex_name(v).to_string(), json!(ok)))
        .collect();
    json!({"edges": edge_names(h, &w.edges), "claims": claims})
}

// Labelings and loose paths

/// `{"target": "vertices"|"edges", "map": {"a": 1, ...}}`. Labels must be
/// distinct positive integers; unmapped elements stay unlabeled.
pub fn parse_labeling(h: &Hypergraph, value: &Value) -> Result<Labeling> {
    let obj = object(value, "labeling")?;
    let target = match obj.get("target").and_then(Value::as_str) {
        Some("vertices") | None => Target::Vertices,
        Some("edges") => Target::Edges,
        Some(other) => return Err(parse_err(format!("labeling: unknown target `{other}`"))),
    };
    let size = match target {
        Target::Vertices => h.vertex_count(),
        Target::Edges => h.edge_count(),
    };
    let mut labels = vec![None; size];
    let raw = obj
        .get("map")
        .ok_or_else(|| parse_err("labeling: missing field `map`"))?;
    for (key, label) in object(raw, "map")? {
        let i = match target {
            Target::Vertices => h.vertex(key)?,
            Target::Edges => h.edge_ref(key)?,
        };
        let label = label
            .as_u64()
            .ok_or_else(|| parse_err(format!("labeling: label of `{key}` is not a non-negative integer")))?;
        labels[i] = Some(label);
    }
    Labeling::injective(target, labels)
}

pub fn labeling_to_json(h: &Hypergraph, phi: &Labeling) -> Value {
    let map: Map<String, Value> = phi
        .labels()
        .iter()
        .enumerate()
        .filter_map(|(i, l)| {
            let name = match phi.target() {
                Target::Vertices => h.vertex_name(i),
                Target::Edges => h.edge_name(i),
            };
            l.map(|l| (name.to_string(), json!(l)))
        })
        .collect();
    json!({"target": phi.target().as_str(), "map": map})
}

/// A loose path is given by its vertex sequence; the edges are derived.
pub fn parse_vertex_sequence(h: &Hypergraph, value: &Value) -> Result<Vec<usize>> {
    let list = match value {
        Value::Object(obj) => obj
            .get("vertices")
            .ok_or_else(|| parse_err("path: missing field `vertices`"))?,
        other => other,
    };
    array(list, "path")?
        .iter()
        .map(|v| h.vertex(&id(v, "vertex")?))
        .collect()
}

pub fn loose_path_to_json(h: &Hypergraph, p: &LoosePath) -> Value {
    json!({
        "k": p.k(),
        "length": p.edge_count(),
        "vertices": names(h, p.vertices()),
        "edges": edge_names(h, p.edges()),
    })
}
