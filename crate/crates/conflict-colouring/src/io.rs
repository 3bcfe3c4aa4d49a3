//! Canonical file formats (JSON).
//!
//! Instance files carry `k`, `n` and an `edges` list of `{u, v, lu, lv}`
//! records in edge-id order with 1-based colours; writers emit edges sorted
//! by id and readers renumber by position. Adaptable and separation files
//! extend the schema with per-vertex `lists` arrays and (for adaptable)
//! per-edge `label` fields.

use crate::model::{Colouring, ConflictInstance, Multigraph};
use crate::reductions::{AdaptableInstance, SeparationInstance};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;

#[derive(Debug)]
pub enum IoError {
    Io(std::io::Error),
    Parse(String),
    Invalid(crate::Error),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Io(e) => write!(f, "io error: {e}"),
            IoError::Parse(e) => write!(f, "parse error: {e}"),
            IoError::Invalid(e) => write!(f, "invalid instance: {e}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<std::io::Error> for IoError {
    fn from(e: std::io::Error) -> Self {
        IoError::Io(e)
    }
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Parse(e.to_string())
    }
}

impl From<crate::Error> for IoError {
    fn from(e: crate::Error) -> Self {
        IoError::Invalid(e)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeRecord {
    u: usize,
    v: usize,
    lu: usize,
    lv: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct InstanceFile {
    k: usize,
    n: usize,
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LabelledEdgeRecord {
    u: usize,
    v: usize,
    label: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct AdaptableFile {
    k: usize,
    n: usize,
    lists: Vec<Vec<usize>>,
    edges: Vec<LabelledEdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PlainEdgeRecord {
    u: usize,
    v: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct SeparationFile {
    k: usize,
    n: usize,
    lists: Vec<Vec<usize>>,
    edges: Vec<PlainEdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ColouringFile {
    colours: Vec<usize>,
}

pub fn instance_to_json(inst: &ConflictInstance) -> String {
    let edges = inst
        .graph()
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let (lu, lv) = inst.pair(e);
            EdgeRecord { u, v, lu, lv }
        })
        .collect();
    let file = InstanceFile { k: inst.k(), n: inst.graph().vertex_count(), edges };
    serde_json::to_string_pretty(&file).expect("instance serialization cannot fail")
}

pub fn instance_from_json(text: &str) -> Result<ConflictInstance, IoError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let edges = file.edges.iter().map(|r| (r.u, r.v)).collect();
    let pairs = file.edges.iter().map(|r| (r.lu, r.lv)).collect();
    Ok(ConflictInstance::build(file.n, edges, file.k, pairs)?)
}

pub fn read_instance(path: &Path) -> Result<ConflictInstance, IoError> {
    instance_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_instance(path: &Path, inst: &ConflictInstance) -> Result<(), IoError> {
    Ok(std::fs::write(path, instance_to_json(inst))?)
}

pub fn adaptable_to_json(a: &AdaptableInstance) -> String {
    let edges = a
        .graph()
        .edges()
        .iter()
        .zip(a.labels())
        .map(|(&(u, v), &label)| LabelledEdgeRecord { u, v, label })
        .collect();
    let file = AdaptableFile {
        k: a.k(),
        n: a.graph().vertex_count(),
        lists: a.lists().to_vec(),
        edges,
    };
    serde_json::to_string_pretty(&file).expect("instance serialization cannot fail")
}

pub fn adaptable_from_json(text: &str) -> Result<AdaptableInstance, IoError> {
    let file: AdaptableFile = serde_json::from_str(text)?;
    let graph = Multigraph::new(file.n, file.edges.iter().map(|r| (r.u, r.v)).collect())?;
    let labels = file.edges.iter().map(|r| r.label).collect();
    Ok(AdaptableInstance::new(graph, file.lists, labels)?)
}

pub fn read_adaptable(path: &Path) -> Result<AdaptableInstance, IoError> {
    adaptable_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_adaptable(path: &Path, a: &AdaptableInstance) -> Result<(), IoError> {
    Ok(std::fs::write(path, adaptable_to_json(a))?)
}

pub fn separation_from_json(text: &str) -> Result<SeparationInstance, IoError> {
    let file: SeparationFile = serde_json::from_str(text)?;
    let graph = Multigraph::new(file.n, file.edges.iter().map(|r| (r.u, r.v)).collect())?;
    Ok(SeparationInstance::new(graph, file.lists)?)
}

pub fn colouring_to_json(c: &Colouring) -> String {
    serde_json::to_string_pretty(&ColouringFile { colours: c.colours().to_vec() })
        .expect("colouring serialization cannot fail")
}

pub fn colouring_from_json(text: &str) -> Result<Colouring, IoError> {
    let file: ColouringFile = serde_json::from_str(text)?;
    Ok(Colouring::new(file.colours))
}

pub fn read_colouring(path: &Path) -> Result<Colouring, IoError> {
    colouring_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_colouring(path: &Path, c: &Colouring) -> Result<(), IoError> {
    Ok(std::fs::write(path, colouring_to_json(c))?)
}
