//! Presentation presets and the run configuration shared by all commands.

use std::path::{Path, PathBuf};

use artin::large_type::ArtinGroup;
use artin::oracle::{cache, Ball};
use artin::{parse_word, CoxeterPresentation, LetterOrder};

use crate::{CliError, Result};

/// The presentations shipped in `presets/`, embedded at build time.
pub struct Presets;

const PRESETS: &[(&str, &str)] = &[
    ("da3", include_str!("../../../presets/da3.toml")),
    ("da4", include_str!("../../../presets/da4.toml")),
    ("da5", include_str!("../../../presets/da5.toml")),
    ("da-inf", include_str!("../../../presets/da-inf.toml")),
    ("tri-345", include_str!("../../../presets/tri-345.toml")),
    ("tri-444", include_str!("../../../presets/tri-444.toml")),
    ("tri-433", include_str!("../../../presets/tri-433.toml")),
];

impl Presets {
    pub fn names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|(name, _)| *name)
    }

    pub fn get(name: &str) -> Result<CoxeterPresentation> {
        let (_, text) = PRESETS
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| CliError::UnknownPreset(name.to_string(), Self::names().collect::<Vec<_>>().join(", ")))?;
        Ok(CoxeterPresentation::from_toml_str(text)?)
    }

    /// A preset name, or else a path to a presentation file.
    pub fn resolve(name_or_path: &str) -> Result<CoxeterPresentation> {
        if PRESETS.iter().any(|(n, _)| *n == name_or_path) {
            return Self::get(name_or_path);
        }
        let path = Path::new(name_or_path);
        if !path.exists() {
            return Err(CliError::UnknownPreset(
                name_or_path.to_string(),
                Self::names().collect::<Vec<_>>().join(", "),
            ));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: name_or_path.to_string(), message: e.to_string() })?;
        Ok(CoxeterPresentation::from_toml_str(&text)?)
    }
}

/// Everything a command needs besides its own arguments.
///
/// Identical configurations produce byte-identical reports and artifacts.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub presentation: CoxeterPresentation,
    /// Letter order as a word listing every letter once, e.g. `aAbB`.
    pub order: Option<String>,
    pub seed: u64,
    pub allow_counterexample: bool,
    /// Budget on ball sizes.
    pub max_elements: usize,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(presentation: CoxeterPresentation) -> Self {
        RunConfig {
            presentation,
            order: None,
            seed: 1,
            allow_counterexample: false,
            max_elements: 5_000_000,
            cache_dir: None,
        }
    }

    pub fn letter_order(&self) -> Result<LetterOrder> {
        let n = self.presentation.n();
        match &self.order {
            None => Ok(LetterOrder::default_for(n)),
            Some(text) => {
                let seq = parse_word(text, n).map_err(artin::Error::from)?;
                LetterOrder::from_sequence(n, &seq).ok_or_else(|| CliError::BadOrder(text.clone()))
            }
        }
    }

    pub fn group(&self) -> Result<ArtinGroup> {
        let group = ArtinGroup::with_order(self.presentation.clone(), self.letter_order()?)?;
        Ok(group.allow_counterexample(self.allow_counterexample))
    }

    /// Complete ball of `radius`, read from and written to the cache directory when set.
    ///
    /// Returns the ball and whether it came from the cache.
    pub fn ball(&self, group: &ArtinGroup, radius: usize) -> Result<(Ball, bool)> {
        let Some(dir) = &self.cache_dir else {
            return Ok((group.complete_ball(radius, self.max_elements)?, false));
        };
        let path = cache::cache_path(dir, &self.presentation.hash_hex(), radius, group.order());
        if path.exists() {
            let ball = cache::load(&path)?;
            if !ball.truncated && ball.complete_radius() >= radius {
                return Ok((ball, true));
            }
        }
        let ball = group.complete_ball(radius, self.max_elements)?;
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Io { path: dir.display().to_string(), message: e.to_string() })?;
        cache::store(&path, &ball)?;
        Ok((ball, false))
    }
}
