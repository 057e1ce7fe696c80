use std::path::Path;

use blockmzv::verify::{Bounds, Engine, GeneratorSource, Mutation, Suite, VerifyConfig};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

/// Settings of a verification run, also read from a flat TOML file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub max_weight: usize,
    pub max_block_degree: usize,
    pub output_format: OutputFormat,
    pub suites: Vec<Suite>,
    pub generators: GeneratorSource,
    /// `"5:1"` flips the sign of `c1` in `q_5`; for exercising the suites.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutate: Option<String>,
}

impl Default for CliConfig {
    fn default() -> Self {
        let v = VerifyConfig::default();
        CliConfig {
            max_weight: v.bounds.max_weight,
            max_block_degree: v.bounds.max_block_degree,
            output_format: OutputFormat::Text,
            suites: v.suites,
            generators: GeneratorSource::ClosedForm,
            mutate: None,
        }
    }
}

/// Parses `"<2k+1>:<i>"`.
pub fn parse_mutation(s: &str) -> Result<Mutation, String> {
    let (w, i) = s
        .split_once(':')
        .ok_or_else(|| format!("mutation `{s}` is not of the form WEIGHT:INDEX"))?;
    let w: usize = w.trim().parse().map_err(|_| format!("invalid weight `{w}`"))?;
    let i: usize = i.trim().parse().map_err(|_| format!("invalid coefficient index `{i}`"))?;
    if w < 3 || w.is_multiple_of(2) {
        return Err(format!("generator weight {w} must be odd and at least 3"));
    }
    Ok(Mutation {
        k: (w - 1) / 2,
        coefficient: i,
    })
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    pub fn verify_config(&self) -> Result<VerifyConfig, String> {
        let bounds = Bounds::new(self.max_weight, self.max_block_degree).map_err(|e| e.to_string())?;
        let mutation = self.mutate.as_deref().map(parse_mutation).transpose()?;
        Ok(VerifyConfig {
            bounds,
            suites: self.suites.clone(),
            engine: Engine {
                source: self.generators,
                mutation,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_toml_round_trip() {
        let c: CliConfig = toml::from_str(
            "max_weight = 9\nmax_block_degree = 2\noutput_format = \"structured\"\nsuites = [\"duality\", \"freeness\"]\n",
        )
        .unwrap();
        assert_eq!(c.max_weight, 9);
        assert_eq!(c.suites, vec![Suite::Duality, Suite::Freeness]);
        assert_eq!(c.output_format, OutputFormat::Structured);
        let empty: CliConfig = toml::from_str("").unwrap();
        assert_eq!(empty, CliConfig::default());
        assert!(toml::from_str::<CliConfig>("max_wieght = 3").is_err());
        assert!(toml::from_str::<CliConfig>("suites = [\"nope\"]").is_err());
    }

    #[test]
    fn mutation_syntax() {
        assert_eq!(parse_mutation("5:1").unwrap(), Mutation { k: 2, coefficient: 1 });
        assert!(parse_mutation("4:1").is_err());
        assert!(parse_mutation("5").is_err());
    }
}
