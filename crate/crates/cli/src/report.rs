use serde::Serialize;
use serde_json::{json, Map, Value};
use tourpat_core::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Human,
    Json,
}

/// Everything that influenced a run, echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub argv: Vec<String>,
    pub format: Format,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
    pub timeout_secs: Option<f64>,
    pub max_nodes: Option<u64>,
    pub caps: Limits,
}

#[derive(Clone, Debug)]
pub struct Report {
    /// Notation for the computed quantity, e.g. `t(T_n,H)`.
    pub quantity: String,
    pub fields: Map<String, Value>,
    /// Fields shown only in JSON output.
    pub json_fields: Map<String, Value>,
    /// Re-parseable text of the witness or constructed object.
    pub witness: Option<String>,
    /// Print the witness as the body of human output (constructions).
    pub witness_is_body: bool,
}

impl Report {
    pub fn new(quantity: impl Into<String>) -> Self {
        Self {
            quantity: quantity.into(),
            fields: Map::new(),
            json_fields: Map::new(),
            witness: None,
            witness_is_body: false,
        }
    }

    pub fn field(mut self, key: &str, value: impl Serialize) -> Self {
        self.fields.insert(key.to_string(), json!(value));
        self
    }

    pub fn json_field(mut self, key: &str, value: impl Serialize) -> Self {
        self.json_fields.insert(key.to_string(), json!(value));
        self
    }

    pub fn witness(mut self, text: Option<String>) -> Self {
        self.witness = text;
        self
    }

    pub fn body(mut self, text: String) -> Self {
        self.witness = Some(text);
        self.witness_is_body = true;
        self
    }

    pub fn render(&self, config: &RunConfig) -> String {
        match config.format {
            Format::Json => {
                let mut result = self.fields.clone();
                result.extend(self.json_fields.clone());
                let v = json!({
                    "quantity": self.quantity,
                    "config": config,
                    "result": result,
                    "witness": self.witness,
                });
                serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
            }
            Format::Human => self.human(config),
        }
    }

    fn human(&self, config: &RunConfig) -> String {
        let mut out = format!(
            "# tourpat {}\n# quantity: {}\n",
            config.argv.join(" "),
            self.quantity
        );
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        out += &format!(
            "# seed: {}  threads: {}  timeout: {}  max-nodes: {}\n",
            opt(config.seed.map(|s| s.to_string())),
            opt(config.threads.map(|s| s.to_string())),
            opt(config.timeout_secs.map(|s| format!("{s}s"))),
            opt(config.max_nodes.map(|s| s.to_string())),
        );
        if let Value::Object(caps) = json!(config.caps) {
            let caps: Vec<String> = caps.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out += &format!("# caps: {}\n", caps.join(" "));
        }
        let prefix = if self.witness_is_body { "# " } else { "" };
        for (k, v) in &self.fields {
            out += &format!("{prefix}{k}: {}\n", scalar(v));
        }
        if let Some(w) = &self.witness {
            if !self.witness_is_body {
                out += "witness:\n";
            }
            out += w;
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// 0-based vertices to 1-based ids.
pub fn ids(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

pub fn id_sets(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| ids(s)).collect()
}

pub fn id_pairs(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(a, b)| [a + 1, b + 1]).collect()
}

/// A vertex map `pattern vertex -> host vertex` as text, one line of 1-based
/// host ids in pattern order.
pub fn map_text(map: &[usize]) -> String {
    let v: Vec<String> = map.iter().map(|x| (x + 1).to_string()).collect();
    v.join(" ") + "\n"
}
