//! Resolves lexicon references such as `builtin:fig2`, `adversarial:m=2`,
//! `graph:petersen` or `file:words.txt`.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use hangman_core::{adversarial_family, proper_encode, CubicGraph, Lexicon};
use serde::Serialize;

use crate::error::ServiceError;

/// A short English lexicon (three-letter words) over the full Latin alphabet.
const FIG1_WORDS: &str = "sigma=26
bun
fun
gun
nun
pun
run
sun
fan
fin
fit
fog
fox
hat
hen
hog
jam
jet
kit
log
map
net
pen
pig
rat
sip
ten
tub
van
web
yak
zip
";

const FIG2_WORDS: &str = "abbc\nabcb\nabcc\ndddd\neeee\n";

#[derive(Debug, Clone, Serialize)]
pub struct LexiconEntry {
    pub name: String,
    pub words: usize,
    pub k: usize,
    pub sigma: u32,
}

#[derive(Debug, Clone, Default)]
pub struct LexiconCatalog {
    dir: Option<PathBuf>,
}

impl LexiconCatalog {
    pub fn new(dir: Option<PathBuf>) -> Self {
        LexiconCatalog { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn resolve(&self, reference: &str) -> Result<Arc<Lexicon>, ServiceError> {
        let unknown = || ServiceError::UnknownLexicon(reference.to_string());
        let (kind, arg) = reference.split_once(':').ok_or_else(unknown)?;
        let lexicon = match kind {
            "builtin" => match arg {
                "fig1" => Lexicon::parse(FIG1_WORDS)?,
                "fig2" => Lexicon::parse(FIG2_WORDS)?,
                _ => return Err(unknown()),
            },
            "adversarial" => {
                let m = arg
                    .strip_prefix("m=")
                    .and_then(|m| m.parse::<u32>().ok())
                    .ok_or_else(unknown)?;
                adversarial_family(m)?
            }
            "graph" => proper_encode(&CubicGraph::named(arg).ok_or_else(unknown)?),
            "file" => {
                let dir = self.dir.as_ref().ok_or_else(unknown)?;
                if arg.is_empty() || arg.contains(['/', '\\']) || arg.starts_with('.') {
                    return Err(unknown());
                }
                let text = std::fs::read_to_string(dir.join(arg)).map_err(|_| unknown())?;
                Lexicon::parse(&text)?
            }
            _ => return Err(unknown()),
        };
        Ok(Arc::new(lexicon))
    }

    /// Built-ins, small generated families, named graphs and files in the lexicon directory.
    pub fn list(&self) -> Vec<LexiconEntry> {
        let mut names: Vec<String> = vec!["builtin:fig1".into(), "builtin:fig2".into()];
        names.extend((1..=3).map(|m| format!("adversarial:m={m}")));
        names.extend(
            hangman_core::graph::NAMED_GRAPHS
                .iter()
                .map(|g| format!("graph:{g}")),
        );
        if let Some(dir) = &self.dir {
            if let Ok(entries) = std::fs::read_dir(dir) {
                let mut files: Vec<String> = entries
                    .filter_map(|e| e.ok())
                    .filter(|e| e.path().is_file())
                    .filter_map(|e| e.file_name().into_string().ok())
                    .filter(|name| !name.starts_with('.'))
                    .map(|name| format!("file:{name}"))
                    .collect();
                files.sort();
                names.extend(files);
            }
        }
        names
            .into_iter()
            .filter_map(|name| {
                let l = self.resolve(&name).ok()?;
                Some(LexiconEntry {
                    words: l.len(),
                    k: l.k(),
                    sigma: l.sigma(),
                    name,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_generated_lexicons() {
        let c = LexiconCatalog::default();
        let five = c.resolve("builtin:fig2").unwrap();
        assert_eq!(*c.resolve("adversarial:m=2").unwrap(), *five);
        let p = c.resolve("graph:petersen").unwrap();
        assert_eq!((p.len(), p.k(), p.sigma()), (10, 4, 10));
        let english = c.resolve("builtin:fig1").unwrap();
        assert_eq!((english.k(), english.sigma()), (3, 26));
    }

    #[test]
    fn rejects_unknown_references() {
        let c = LexiconCatalog::default();
        for bad in [
            "fig2",
            "builtin:nope",
            "adversarial:m=x",
            "graph:k5",
            "file:x.txt",
            "zzz:1",
        ] {
            assert!(
                matches!(c.resolve(bad), Err(ServiceError::UnknownLexicon(_))),
                "{bad}"
            );
        }
        assert!(c.resolve("adversarial:m=0").is_err());
    }

    #[test]
    fn lists_builtins() {
        let names: Vec<_> = LexiconCatalog::default()
            .list()
            .into_iter()
            .map(|e| e.name)
            .collect();
        assert!(names.contains(&"builtin:fig2".to_string()));
        assert!(names.contains(&"graph:petersen".to_string()));
    }
}
