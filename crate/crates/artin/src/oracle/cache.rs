//! Structured-text ball cache.
//!
//! ```text
//! artin-ball 1
//! presentation <hex hash>
//! n <generators>
//! order <letters, least first>
//! radius <R>
//! truncated <0|1>
//! sphere <k> <count>
//! <one canonical word per line>
//! ...
//! end
//! ```

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::ball::Ball;
use crate::error::{Error, Result};
use crate::order::LetterOrder;
use crate::parse::parse_word;
use crate::word::{Letters, Word};

const MAGIC: &str = "artin-ball 1";

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "ARTIN_CACHE_DIR";

/// File-name key for a ball of one presentation, radius and order.
pub fn cache_key(presentation_hash: &str, radius: usize, order: &LetterOrder) -> String {
    let mut h = Sha256::new();
    h.update(presentation_hash.as_bytes());
    h.update(b"|");
    h.update(radius.to_string().as_bytes());
    h.update(b"|");
    h.update(Letters(&order.sequence()).to_string().as_bytes());
    hex::encode(h.finalize())
}

pub fn cache_path(dir: &Path, presentation_hash: &str, radius: usize, order: &LetterOrder) -> PathBuf {
    dir.join(format!("{}.ball", cache_key(presentation_hash, radius, order)))
}

pub fn encode(ball: &Ball) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{MAGIC}");
    let _ = writeln!(s, "presentation {}", ball.presentation_hash);
    let _ = writeln!(s, "n {}", ball.n);
    let _ = writeln!(s, "order {}", Letters(&ball.order.sequence()));
    let _ = writeln!(s, "radius {}", ball.radius);
    let _ = writeln!(s, "truncated {}", u8::from(ball.truncated));
    for (k, sphere) in ball.spheres().iter().enumerate() {
        let _ = writeln!(s, "sphere {k} {}", sphere.len());
        for w in sphere {
            let _ = writeln!(s, "{w}");
        }
    }
    s.push_str("end\n");
    s
}

fn field<'a>(lines: &mut impl Iterator<Item = &'a str>, name: &str) -> Result<&'a str> {
    let line = lines.next().ok_or_else(|| Error::Cache(format!("missing {name} line")))?;
    line.strip_prefix(name)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| Error::Cache(format!("expected {name} line, found {line:?}")))
}

fn number(text: &str, what: &str) -> Result<usize> {
    text.trim().parse().map_err(|_| Error::Cache(format!("bad {what}: {text:?}")))
}

/// Parse a cache file; any malformed or inconsistent content is an error.
pub fn decode(text: &str) -> Result<Ball> {
    let mut lines = text.lines();
    if lines.next() != Some(MAGIC) {
        return Err(Error::Cache("bad header".into()));
    }
    let hash = field(&mut lines, "presentation")?.to_string();
    if hash.is_empty() || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(Error::Cache("presentation hash is not hex".into()));
    }
    let n = number(field(&mut lines, "n")?, "generator count")?;
    if n == 0 || n > 64 {
        return Err(Error::Cache(format!("generator count {n} out of range")));
    }
    let seq = parse_word(field(&mut lines, "order")?, n).map_err(|e| Error::Cache(e.to_string()))?;
    let order = LetterOrder::from_sequence(n, seq.letters())
        .ok_or_else(|| Error::Cache("order is not a permutation of the letters".into()))?;
    let radius = number(field(&mut lines, "radius")?, "radius")?;
    let truncated = match field(&mut lines, "truncated")? {
        "0" => false,
        "1" => true,
        other => return Err(Error::Cache(format!("bad truncated flag {other:?}"))),
    };
    let mut spheres: Vec<Vec<Word>> = Vec::new();
    loop {
        let line = lines.next().ok_or_else(|| Error::Cache("missing end marker".into()))?;
        if line == "end" {
            break;
        }
        let rest = line
            .strip_prefix("sphere ")
            .ok_or_else(|| Error::Cache(format!("expected sphere line, found {line:?}")))?;
        let (k, count) = rest.split_once(' ').ok_or_else(|| Error::Cache("bad sphere line".into()))?;
        let (k, count) = (number(k, "sphere index")?, number(count, "sphere size")?);
        if k != spheres.len() || k > radius {
            return Err(Error::Cache(format!("sphere {k} out of sequence")));
        }
        let mut sphere = Vec::with_capacity(count.min(1 << 16));
        for _ in 0..count {
            let line = lines.next().ok_or_else(|| Error::Cache("sphere shorter than its count".into()))?;
            let w = parse_word(line, n).map_err(|e| Error::Cache(e.to_string()))?;
            if !w.is_freely_reduced() {
                return Err(Error::Cache(format!("word {w} is not freely reduced")));
            }
            sphere.push(w);
        }
        spheres.push(sphere);
    }
    if lines.next().is_some() {
        return Err(Error::Cache("trailing data after end marker".into()));
    }
    Ball::from_spheres(hash, n, order, radius, truncated, spheres)
}

pub fn load(path: &Path) -> Result<Ball> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    decode(&text)
}

pub fn store(path: &Path, ball: &Ball) -> Result<()> {
    std::fs::write(path, encode(ball)).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
}
