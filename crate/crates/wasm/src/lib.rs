//! Browser bindings: interactive play against the activation strategy, the
//! forest decomposition overlay and the bound calculator. Everything crosses
//! the boundary as JSON text.

use icg_core::forest::{analyze, RootPolicy};
use icg_core::game::IncidenceRef;
use icg_core::graph::{generate, Family};
use icg_core::harness::{andres_bounds, lower_bound, theorem_bound, trivial_upper_bound};
use icg_core::session::{Session, SessionSpec};
use icg_core::Graph;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializes")
}

/// A game in which the page plays Bob.
#[wasm_bindgen]
pub struct Demo {
    session: Session,
}

#[wasm_bindgen]
impl Demo {
    /// `spec` is a session spec, e.g. `{"family":"star","params":[4]}`.
    #[wasm_bindgen(constructor)]
    pub fn new(spec: &str) -> Result<Demo, String> {
        let spec: SessionSpec = serde_json::from_str(spec).map_err(|e| e.to_string())?;
        Ok(Demo { session: Session::create(spec).map_err(|e| e.to_string())? })
    }

    pub fn view(&self) -> String {
        to_json(&self.session.view())
    }

    pub fn hints(&self) -> String {
        to_json(&self.session.hints())
    }

    /// Bob's move and Alice's reply; an illegal move leaves the game as it was.
    pub fn bob_move(&mut self, vertex: usize, edge: usize, color: u16) -> Result<String, String> {
        let t = self.session.submit_bob_move(IncidenceRef { vertex, edge }, color).map_err(|e| e.to_string())?;
        Ok(to_json(&t))
    }

    /// Spectate mode only.
    pub fn step(&mut self) -> Result<String, String> {
        self.session.step().map(|t| to_json(&t)).map_err(|e| e.to_string())
    }

    pub fn transcript(&self) -> String {
        self.session.transcript().to_jsonl()
    }
}

/// Graph text for a generated family.
#[wasm_bindgen]
pub fn family_graph(name: &str, params: Vec<f64>, seed: u32) -> Result<String, String> {
    let family = Family::from_name(name, &params).map_err(|e| e.to_string())?;
    Ok(generate(&family, seed as u64).map_err(|e| e.to_string())?.to_text())
}

/// Forest decomposition of a graph given as text, with `root_policy` one of
/// `first_vertex`, `max_degree` or `random:SEED`.
#[wasm_bindgen]
pub fn decomposition(graph: &str, root_policy: &str) -> Result<String, String> {
    let g = Graph::parse_text(graph).map_err(|e| e.to_string())?;
    let policy: RootPolicy = root_policy.parse()?;
    let (dec, _) = analyze(&g, policy).map_err(|e| e.to_string())?;
    let edges: Vec<_> = g.edges().map(|(e, ends)| json!({"id": e.0, "endpoints": ends})).collect();
    Ok(to_json(&json!({
        "vertices": g.vertex_count(),
        "edges": edges,
        "max_degree": g.max_degree(),
        "decomposition": dec,
    })))
}

/// Bound calculator; `degeneracy = 0` skips the degeneracy-based bounds.
#[wasm_bindgen]
pub fn bounds(delta: usize, arboricity: usize, degeneracy: usize) -> Result<String, String> {
    let theorem = theorem_bound(delta, arboricity).map_err(|e| e.to_string())?;
    let andres = match degeneracy {
        0 => None,
        k => Some(andres_bounds(delta, k).map_err(|e| e.to_string())?),
    };
    Ok(to_json(&json!({
        "theorem": theorem,
        "lower": lower_bound(delta),
        "trivial_upper": trivial_upper_bound(delta),
        "andres": andres,
        "andres_best": andres.map(|b| b.best()),
    })))
}
