use serde_json::Value;

use gentle_mar::string_modules::composition_text;
use gentle_mar::{AlgebraPresentation, BoundQuiver, StringWord};

/// One module per line: word, then its radical layers.
pub fn module_list(q: &BoundQuiver, ws: &[StringWord]) -> String {
    ws.iter().map(|w| format!("{}\t{}\n", w.display(q), composition_text(q, w))).collect()
}

pub fn word_list(q: &BoundQuiver, ws: &[StringWord]) -> Value {
    Value::Array(ws.iter().map(|w| Value::String(w.display(q).to_string())).collect())
}

pub fn presentation_text(base: &BoundQuiver, p: &AlgebraPresentation) -> String {
    let q = &p.quiver;
    let mut s = format!(
        "{} vertices, {} arrows, {} relations\n",
        q.vertex_count(),
        q.arrow_count(),
        q.relations().len()
    );
    for v in 0..q.vertex_count() {
        let w = &p.vertex_labels[v];
        s.push_str(&format!("vertex {}: {}\t{}\n", q.vertex_name(v), w.display(base), composition_text(base, w)));
    }
    for a in q.arrows() {
        s.push_str(&format!("arrow {}: {} -> {}\n", a.name, q.vertex_name(a.source), q.vertex_name(a.target)));
    }
    for &(a, b) in q.relations() {
        s.push_str(&format!("relation {} {}\n", q.arrow_name(a), q.arrow_name(b)));
    }
    s
}

/// Renames vertices `1, 2, ...` following the order of `wanted`.
pub fn relabel(p: &AlgebraPresentation, wanted: &[StringWord]) -> Result<AlgebraPresentation, String> {
    let q = &p.quiver;
    let mut sorted_wanted = wanted.to_vec();
    sorted_wanted.sort();
    let mut have = p.vertex_labels.clone();
    have.sort();
    if sorted_wanted != have {
        return Err("order file must list exactly the summands of the module".into());
    }
    let name = |v: usize| -> String {
        let k = wanted.iter().position(|w| *w == p.vertex_labels[v]).expect("checked above");
        (k + 1).to_string()
    };
    let vertices: Vec<String> = (0..q.vertex_count()).map(name).collect();
    let arrows = q.arrows().iter().map(|a| (a.name.clone(), name(a.source), name(a.target)));
    let relations = q
        .relations()
        .iter()
        .map(|&(a, b)| (q.arrow_name(a).to_string(), q.arrow_name(b).to_string()));
    let quiver = BoundQuiver::new(vertices, arrows, relations).map_err(|e| e.to_string())?;
    let vertex_labels = (0..quiver.vertex_count())
        .map(|v| {
            let k: usize = quiver.vertex_name(v).parse().expect("numeric names");
            wanted[k - 1].clone()
        })
        .collect();
    Ok(AlgebraPresentation { quiver, vertex_labels, infinite_dimensional: p.infinite_dimensional })
}
