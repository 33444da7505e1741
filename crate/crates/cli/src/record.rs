//! The per-run result record shared by the JSON solve output and the
//! benchmark CSV.

use serde::{Deserialize, Serialize};

/// One solver run (or error) on one instance. `nodes` is the mean
/// recursion node count per trial; `ratio` is oracle/result for
/// independent set and result/oracle for covers and colorings, so a
/// ratio is always >= 1 when both sides are present.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance: String,
    pub generator: String,
    pub solver: String,
    pub p: Option<f64>,
    pub d: Option<usize>,
    pub leaf: Option<String>,
    pub trials: Option<u32>,
    pub seed: Option<u64>,
    pub result_size: Option<usize>,
    pub oracle: Option<usize>,
    pub ratio: Option<f64>,
    pub nodes: Option<f64>,
    pub node_bound: Option<f64>,
    pub elapsed_us: u64,
    pub error: Option<String>,
}

impl BenchRecord {
    pub fn error_row(instance: &str, generator: &str, solver: &str, msg: String) -> Self {
        BenchRecord {
            instance: instance.to_string(),
            generator: generator.to_string(),
            solver: solver.to_string(),
            p: None,
            d: None,
            leaf: None,
            trials: None,
            seed: None,
            result_size: None,
            oracle: None,
            ratio: None,
            nodes: None,
            node_bound: None,
            elapsed_us: 0,
            error: Some(msg),
        }
    }
}

pub const CSV_HEADER: &str =
    "instance,generator,solver,p,d,leaf,trials,seed,result_size,oracle,ratio,nodes,node_bound,elapsed_us,error\n";

pub fn records_to_csv(records: &[BenchRecord]) -> Result<String, csv::Error> {
    if records.is_empty() {
        return Ok(CSV_HEADER.to_string());
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().expect("in-memory writer");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn records_from_csv(text: &str) -> Result<Vec<BenchRecord>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}
