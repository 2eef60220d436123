//! OFF and OBJ emitters, plus an OFF reader for round trips.

use std::fmt::Write as _;

use a4poly::field::format_significant;
use a4poly::Mesh3D;

use crate::CliError;

/// Float vertices and faces, ready to be written.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
    pub tag: Option<String>,
}

impl FloatMesh {
    /// Converts an exact mesh, multiplying every coordinate by `unit`.
    pub fn from_exact(mesh: &Mesh3D, unit: f64) -> Self {
        FloatMesh {
            vertices: mesh.vertices_f64().into_iter().map(|v| v.map(|x| x * unit)).collect(),
            faces: mesh.faces.clone(),
            tag: mesh.tag.clone(),
        }
    }

    pub fn edge_count(&self) -> usize {
        let mut edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |k| (f[k].min(f[(k + 1) % f.len()]), f[k].max(f[(k + 1) % f.len()]))))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges.len()
    }
}

fn coord(x: f64, digits: usize) -> String {
    format_significant(x, digits)
}

pub fn write_off(mesh: &FloatMesh, digits: usize) -> String {
    let mut s = String::from("OFF\n");
    if let Some(tag) = &mesh.tag {
        let _ = writeln!(s, "# {tag}");
    }
    let _ = writeln!(s, "{} {} {}", mesh.vertices.len(), mesh.faces.len(), mesh.edge_count());
    for v in &mesh.vertices {
        let _ = writeln!(s, "{} {} {}", coord(v[0], digits), coord(v[1], digits), coord(v[2], digits));
    }
    for f in &mesh.faces {
        let idx: Vec<String> = f.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{} {}", f.len(), idx.join(" "));
    }
    s
}

pub fn write_obj(mesh: &FloatMesh, digits: usize) -> String {
    let mut s = String::new();
    if let Some(tag) = &mesh.tag {
        let _ = writeln!(s, "# {tag}");
    }
    for v in &mesh.vertices {
        let _ = writeln!(s, "v {} {} {}", coord(v[0], digits), coord(v[1], digits), coord(v[2], digits));
    }
    for f in &mesh.faces {
        let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(s, "f {}", idx.join(" "));
    }
    s
}

/// Parsed OFF file; `edges` is the header value.
#[derive(Clone, Debug, PartialEq)]
pub struct OffFile {
    pub mesh: FloatMesh,
    pub edges: usize,
}

pub fn parse_off(text: &str) -> Result<OffFile, CliError> {
    let bad = |m: &str| CliError::Parse(format!("OFF: {m}"));
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    if lines.next() != Some("OFF") {
        return Err(bad("missing header"));
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(|| bad("missing counts"))?
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| bad("malformed counts"))?;
    let [nv, nf, ne] = counts[..] else {
        return Err(bad("counts line needs three numbers"));
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let xs: Vec<f64> = lines
            .next()
            .ok_or_else(|| bad("truncated vertex list"))?
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| bad("malformed vertex"))?;
        let [x, y, z] = xs[..] else {
            return Err(bad("vertex needs three coordinates"));
        };
        vertices.push([x, y, z]);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let ids: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("truncated face list"))?
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| bad("malformed face"))?;
        let (&n, rest) = ids.split_first().ok_or_else(|| bad("empty face"))?;
        if rest.len() != n || rest.iter().any(|&i| i >= nv) {
            return Err(bad("face does not match its length or vertex range"));
        }
        faces.push(rest.to_vec());
    }
    if lines.next().is_some() {
        return Err(bad("trailing data"));
    }
    Ok(OffFile { mesh: FloatMesh { vertices, faces, tag: None }, edges: ne })
}
