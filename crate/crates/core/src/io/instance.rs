//! JSON instance documents and the gadget sidecar record.
//!
//! Coordinates are serialized with the shortest decimal that round-trips
//! the exact double, so `parse(serialize(x)) == x` for every valid
//! document. Writes go through a temp-file-and-rename so readers never see
//! a partial file.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

use super::IoError;
use crate::gadget::{Drawing, Gadget};
use crate::geodesic::PolygonalDomain;
use crate::geom::{Point, Polygon};
use crate::sliceable::OneDimInstance;

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    /// A polygonal domain, optionally with a site budget.
    Domain {
        domain: PolygonalDomain,
        k: Option<usize>,
        metadata: Option<Value>,
    },
    /// Collinear points, optionally with a site budget.
    OneDim {
        instance: OneDimInstance,
        k: Option<usize>,
        metadata: Option<Value>,
    },
    /// An orthogonal graph drawing with its cover budget.
    Drawing {
        drawing: Drawing,
        metadata: Option<Value>,
    },
}

fn parse_points(v: &Value, what: &str) -> Result<Vec<Point>, IoError> {
    let arr = v
        .as_array()
        .ok_or_else(|| IoError::Parse(format!("{what} must be an array of [x, y] pairs")))?;
    arr.iter()
        .enumerate()
        .map(|(i, e)| {
            let pair = e
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| IoError::Parse(format!("{what}[{i}] must be [x, y]")))?;
            let x = pair[0]
                .as_f64()
                .ok_or_else(|| IoError::Parse(format!("{what}[{i}][0] must be a number")))?;
            let y = pair[1]
                .as_f64()
                .ok_or_else(|| IoError::Parse(format!("{what}[{i}][1] must be a number")))?;
            Ok(Point::new(x, y))
        })
        .collect()
}

fn parse_budget(obj: &serde_json::Map<String, Value>, n: usize) -> Result<Option<usize>, IoError> {
    match obj.get("k") {
        None | Some(Value::Null) => Ok(None),
        Some(v) => {
            let k = v
                .as_u64()
                .ok_or_else(|| IoError::Parse("\"k\" must be a non-negative integer".into()))?
                as usize;
            if k == 0 {
                return Err(IoError::Validation("k must be at least 1".into()));
            }
            if k > n {
                return Err(IoError::Validation(format!(
                    "k = {k} exceeds the instance size {n}"
                )));
            }
            Ok(Some(k))
        }
    }
}

fn metadata_of(obj: &serde_json::Map<String, Value>) -> Option<Value> {
    match obj.get("metadata") {
        None | Some(Value::Null) => None,
        Some(v) => Some(v.clone()),
    }
}

/// Parse and fully validate an instance document.
pub fn parse_instance(text: &str) -> Result<Document, IoError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| IoError::Parse("top level must be an object".into()))?;
    let version = obj
        .get("version")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError::Parse("missing integer \"version\"".into()))?;
    if version != 1 {
        return Err(IoError::Parse(format!("unsupported version {version}")));
    }
    if obj.contains_key("outer") {
        parse_domain_doc(obj)
    } else if obj.contains_key("positions") {
        parse_onedim_doc(obj)
    } else if obj.contains_key("vertices") {
        parse_drawing_doc(obj)
    } else {
        Err(IoError::Parse(
            "expected one of \"outer\", \"positions\", or \"vertices\"".into(),
        ))
    }
}

fn parse_domain_doc(obj: &serde_json::Map<String, Value>) -> Result<Document, IoError> {
    let outer_pts = parse_points(&obj["outer"], "outer")?;
    let outer = Polygon::new(outer_pts)
        .map_err(|e| IoError::Validation(format!("outer ring: {e}")))?;
    let mut holes = Vec::new();
    match obj.get("holes") {
        None | Some(Value::Null) => {}
        Some(v) => {
            let rings = v
                .as_array()
                .ok_or_else(|| IoError::Parse("\"holes\" must be an array of rings".into()))?;
            for (i, ring) in rings.iter().enumerate() {
                let pts = parse_points(ring, &format!("holes[{i}]"))?;
                holes.push(
                    Polygon::new(pts)
                        .map_err(|e| IoError::Validation(format!("hole {i}: {e}")))?,
                );
            }
        }
    }
    let domain = PolygonalDomain::new(outer, holes)
        .map_err(|e| IoError::Validation(e.to_string()))?;
    let k = parse_budget(obj, domain.vertex_count())?;
    Ok(Document::Domain {
        k,
        metadata: metadata_of(obj),
        domain,
    })
}

fn parse_onedim_doc(obj: &serde_json::Map<String, Value>) -> Result<Document, IoError> {
    let arr = obj["positions"]
        .as_array()
        .ok_or_else(|| IoError::Parse("\"positions\" must be an array of numbers".into()))?;
    let positions: Vec<f64> = arr
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_f64()
                .ok_or_else(|| IoError::Parse(format!("positions[{i}] must be a number")))
        })
        .collect::<Result<_, _>>()?;
    let instance =
        OneDimInstance::new(positions).map_err(|e| IoError::Validation(e.to_string()))?;
    let k = parse_budget(obj, instance.positions().len())?;
    Ok(Document::OneDim {
        k,
        metadata: metadata_of(obj),
        instance,
    })
}

fn parse_drawing_doc(obj: &serde_json::Map<String, Value>) -> Result<Document, IoError> {
    let vertices = parse_points(&obj["vertices"], "vertices")?;
    let edges = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError::Parse("missing \"edges\" array".into()))?;
    let mut routes = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let route = e
            .as_object()
            .and_then(|o| o.get("route"))
            .ok_or_else(|| {
                IoError::Parse(format!("edges[{i}] must be an object with a \"route\""))
            })?;
        routes.push(parse_points(route, &format!("edges[{i}].route"))?);
    }
    let kappa = obj
        .get("kappa")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError::Parse("missing integer \"kappa\"".into()))? as usize;
    let drawing = Drawing::new(vertices, routes, kappa)
        .map_err(|e| IoError::Validation(e.to_string()))?;
    Ok(Document::Drawing {
        metadata: metadata_of(obj),
        drawing,
    })
}

fn push_num(out: &mut String, x: f64) {
    // Display for f64 is the shortest decimal that parses back exactly and
    // never uses an exponent, so it is both lossless and valid JSON.
    out.push_str(&x.to_string());
}

fn push_point(out: &mut String, p: Point) {
    out.push('[');
    push_num(out, p.x);
    out.push_str(", ");
    push_num(out, p.y);
    out.push(']');
}

fn push_ring(out: &mut String, pts: &[Point]) {
    out.push('[');
    for (i, &p) in pts.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        push_point(out, p);
    }
    out.push(']');
}

fn push_metadata(out: &mut String, metadata: &Option<Value>) {
    if let Some(m) = metadata {
        out.push_str(",\n  \"metadata\": ");
        out.push_str(&serde_json::to_string(m).expect("metadata serializes"));
    }
}

/// Serialize a document to its canonical JSON text.
pub fn serialize_instance(doc: &Document) -> String {
    let mut out = String::from("{\n  \"version\": 1");
    match doc {
        Document::Domain {
            domain,
            k,
            metadata,
        } => {
            out.push_str(",\n  \"outer\": ");
            push_ring(&mut out, domain.outer().vertices());
            out.push_str(",\n  \"holes\": [");
            for (i, h) in domain.holes().iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                push_ring(&mut out, h.vertices());
            }
            out.push(']');
            if let Some(k) = k {
                out.push_str(&format!(",\n  \"k\": {k}"));
            }
            push_metadata(&mut out, metadata);
        }
        Document::OneDim {
            instance,
            k,
            metadata,
        } => {
            out.push_str(",\n  \"positions\": [");
            for (i, &x) in instance.positions().iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                push_num(&mut out, x);
            }
            out.push(']');
            if let Some(k) = k {
                out.push_str(&format!(",\n  \"k\": {k}"));
            }
            push_metadata(&mut out, metadata);
        }
        Document::Drawing { drawing, metadata } => {
            out.push_str(",\n  \"vertices\": ");
            push_ring(&mut out, drawing.vertices());
            out.push_str(",\n  \"edges\": [");
            for (i, route) in drawing.routes().iter().enumerate() {
                out.push_str(if i > 0 { ",\n    " } else { "\n    " });
                out.push_str("{\"route\": ");
                push_ring(&mut out, route);
                out.push('}');
            }
            out.push_str("\n  ]");
            out.push_str(&format!(",\n  \"kappa\": {}", drawing.kappa()));
            push_metadata(&mut out, metadata);
        }
    }
    out.push_str("\n}\n");
    out
}

/// Write `text` to `path` atomically (temp file in the same directory, then
/// rename over the target).
pub fn write_text_atomic(path: &Path, text: &str) -> Result<(), IoError> {
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(".tmp");
    let tmp = PathBuf::from(tmp_name);
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_instance(path: &Path) -> Result<Document, IoError> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn write_instance(path: &Path, doc: &Document) -> Result<(), IoError> {
    write_text_atomic(path, &serialize_instance(doc))
}

/// Metadata emitted alongside a thickened gadget domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Sidecar {
    pub epsilon: f64,
    /// Site budget for the burn instance.
    pub k: usize,
    pub threshold: f64,
    /// Corner vertex ids per chain vertex.
    pub vertex_map: Vec<[usize; 4]>,
}

impl Sidecar {
    pub fn for_gadget(gadget: &Gadget) -> Sidecar {
        Sidecar {
            epsilon: gadget.epsilon,
            k: gadget.required_sites,
            threshold: gadget.threshold,
            vertex_map: gadget.vertex_map.clone(),
        }
    }
}

pub fn serialize_sidecar(sidecar: &Sidecar) -> String {
    let mut out = String::from("{\n  \"epsilon\": ");
    push_num(&mut out, sidecar.epsilon);
    out.push_str(&format!(",\n  \"K\": {}", sidecar.k));
    out.push_str(",\n  \"threshold\": ");
    push_num(&mut out, sidecar.threshold);
    out.push_str(",\n  \"vertex_map\": {");
    for (v, ids) in sidecar.vertex_map.iter().enumerate() {
        out.push_str(if v > 0 { ",\n    " } else { "\n    " });
        out.push_str(&format!(
            "\"{v}\": [{}, {}, {}, {}]",
            ids[0], ids[1], ids[2], ids[3]
        ));
    }
    out.push_str("\n  }\n}\n");
    out
}

pub fn parse_sidecar(text: &str) -> Result<Sidecar, IoError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| IoError::Parse("top level must be an object".into()))?;
    let epsilon = obj
        .get("epsilon")
        .and_then(Value::as_f64)
        .ok_or_else(|| IoError::Parse("missing number \"epsilon\"".into()))?;
    let k = obj
        .get("K")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError::Parse("missing integer \"K\"".into()))? as usize;
    let threshold = obj
        .get("threshold")
        .and_then(Value::as_f64)
        .ok_or_else(|| IoError::Parse("missing number \"threshold\"".into()))?;
    let map = obj
        .get("vertex_map")
        .and_then(Value::as_object)
        .ok_or_else(|| IoError::Parse("missing object \"vertex_map\"".into()))?;
    let mut vertex_map = vec![None; map.len()];
    for (key, ids) in map {
        let v: usize = key
            .parse()
            .map_err(|_| IoError::Parse(format!("vertex_map key {key:?} is not an index")))?;
        let slot = vertex_map
            .get_mut(v)
            .ok_or_else(|| IoError::Validation(format!("vertex_map index {v} out of range")))?;
        let arr = ids
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| IoError::Parse(format!("vertex_map[{v}] must be 4 vertex ids")))?;
        let mut corners = [0usize; 4];
        for (i, id) in arr.iter().enumerate() {
            corners[i] = id.as_u64().ok_or_else(|| {
                IoError::Parse(format!("vertex_map[{v}][{i}] must be an integer"))
            })? as usize;
        }
        *slot = Some(corners);
    }
    let vertex_map: Vec<[usize; 4]> = vertex_map
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| IoError::Validation(format!("vertex_map misses {v}"))))
        .collect::<Result<_, _>>()?;
    Ok(Sidecar {
        epsilon,
        k,
        threshold,
        vertex_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::{build_gadget, DEFAULT_EPSILON};

    #[test]
    fn square_document_round_trips() {
        let text = r#"{"version":1, "outer":[[0,0],[1,0],[1,1],[0,1]], "k":2}"#;
        let doc = parse_instance(text).unwrap();
        let Document::Domain { domain, k, .. } = &doc else {
            panic!("expected a domain document");
        };
        assert_eq!(domain.vertex_count(), 4);
        assert!(domain.holes().is_empty());
        assert_eq!(*k, Some(2));
        let doc2 = parse_instance(&serialize_instance(&doc)).unwrap();
        assert_eq!(doc, doc2);
    }

    #[test]
    fn rings_normalize_and_doubles_survive() {
        // Clockwise outer ring, fractional coordinates.
        let text = r#"{"version":1,
            "outer":[[0,0],[0,3],[3,3],[3,0]],
            "holes":[[[1.25,1.1],[1.25,2.2],[2.125,2.2],[2.125,1.1]]]}"#;
        let doc = parse_instance(text).unwrap();
        let Document::Domain { domain, .. } = &doc else {
            panic!();
        };
        assert!(domain.outer().area() > 0.0);
        assert!(domain.holes()[0].area() > 0.0);
        let round = parse_instance(&serialize_instance(&doc)).unwrap();
        assert_eq!(doc, round);
        // An awkward double survives the trip exactly.
        let x = 0.1 + 0.2;
        let text = format!(r#"{{"version":1, "outer":[[0,0],[{x},0],[{x},1]]}}"#);
        let doc = parse_instance(&text).unwrap();
        let round = parse_instance(&serialize_instance(&doc)).unwrap();
        assert_eq!(doc, round);
    }

    #[test]
    fn onedim_document_round_trips() {
        let text = r#"{"version":1, "positions":[3, 0, 1.5], "k":2}"#;
        let doc = parse_instance(text).unwrap();
        let Document::OneDim { instance, k, .. } = &doc else {
            panic!("expected a positions document");
        };
        assert_eq!(instance.positions(), &[0.0, 1.5, 3.0]);
        assert_eq!(*k, Some(2));
        assert_eq!(parse_instance(&serialize_instance(&doc)).unwrap(), doc);
    }

    #[test]
    fn drawing_document_round_trips() {
        let text = r#"{"version":1,
            "vertices":[[0,0],[2,0],[2,1]],
            "edges":[{"route":[[0,0],[2,0]]}, {"route":[[2,0],[2,1]]}],
            "kappa":1}"#;
        let doc = parse_instance(text).unwrap();
        let Document::Drawing { drawing, .. } = &doc else {
            panic!("expected a drawing document");
        };
        assert_eq!(drawing.vertices().len(), 3);
        assert_eq!(drawing.kappa(), 1);
        assert_eq!(parse_instance(&serialize_instance(&doc)).unwrap(), doc);
    }

    #[test]
    fn validation_errors_name_the_offender() {
        // Hole outside the outer ring.
        let text = r#"{"version":1, "outer":[[0,0],[1,0],[1,1],[0,1]],
            "holes":[[[5,5],[6,5],[6,6],[5,6]]]}"#;
        match parse_instance(text) {
            Err(IoError::Validation(msg)) => assert!(msg.contains("hole 0"), "{msg}"),
            other => panic!("expected validation error, got {other:?}"),
        }
        // Diagonal route segment.
        let text = r#"{"version":1, "vertices":[[0,0],[1,1]],
            "edges":[{"route":[[0,0],[1,1]]}], "kappa":1}"#;
        match parse_instance(text) {
            Err(IoError::Validation(msg)) => assert!(msg.contains("axis"), "{msg}"),
            other => panic!("expected validation error, got {other:?}"),
        }
        // Budget beyond the vertex count.
        let text = r#"{"version":1, "outer":[[0,0],[1,0],[1,1],[0,1]], "k":9}"#;
        assert!(matches!(parse_instance(text), Err(IoError::Validation(_))));
    }

    #[test]
    fn parse_errors_name_the_field() {
        for (text, needle) in [
            (r#"{"outer":[[0,0],[1,0],[1,1]]}"#, "version"),
            (r#"{"version":2, "outer":[[0,0],[1,0],[1,1]]}"#, "unsupported"),
            (r#"{"version":1}"#, "expected one of"),
            (r#"{"version":1, "outer":[[0,0],[1,0],[1]]}"#, "outer[2]"),
            (r#"{"version":1, "positions":[0, "x"]}"#, "positions[1]"),
            (
                r#"{"version":1, "vertices":[[0,0],[1,0]], "edges":[{}], "kappa":1}"#,
                "edges[0]",
            ),
        ] {
            match parse_instance(text) {
                Err(IoError::Parse(msg)) => assert!(msg.contains(needle), "{msg}"),
                other => panic!("expected parse error for {text}, got {other:?}"),
            }
        }
    }

    #[test]
    fn metadata_passes_through() {
        let text = r#"{"version":1, "positions":[0,1], "metadata":{"seed":7}}"#;
        let doc = parse_instance(text).unwrap();
        let Document::OneDim { metadata, .. } = &doc else {
            panic!();
        };
        assert_eq!(metadata.as_ref().unwrap()["seed"], 7);
        assert_eq!(parse_instance(&serialize_instance(&doc)).unwrap(), doc);
    }

    #[test]
    fn sidecar_round_trips() {
        let drawing = Drawing::new(
            vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)],
            vec![vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]],
            1,
        )
        .unwrap();
        let gadget = build_gadget(&drawing, DEFAULT_EPSILON).unwrap();
        let sidecar = Sidecar::for_gadget(&gadget);
        let text = serialize_sidecar(&sidecar);
        assert_eq!(parse_sidecar(&text).unwrap(), sidecar);
        assert_eq!(sidecar.k, 2);
    }

    #[test]
    fn atomic_write_round_trips_via_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("square.json");
        let doc = parse_instance(r#"{"version":1, "outer":[[0,0],[1,0],[1,1],[0,1]]}"#).unwrap();
        write_instance(&path, &doc).unwrap();
        assert_eq!(read_instance(&path).unwrap(), doc);
        assert!(!path.with_extension("json.tmp").exists());
    }
}
