use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use planar_core::{write_graph, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Cycle,
    Separator,
    Path,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Cycle => "cycle",
            Role::Separator => "separator",
            Role::Path => "path",
        })
    }
}

/// Writes `<dir>/<name>.txt`: the graph with its rotation system, then one comment line
/// `# role <kind> <index> <vertices..>` per item.
pub fn dump_separators(dir: &Path, name: &str, g: &PlaneGraph, items: &[(Role, Vec<usize>)]) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let mut text = write_graph(&g.graph(), Some(g));
    for (i, (role, verts)) in items.iter().enumerate() {
        let list: Vec<String> = verts.iter().map(usize::to_string).collect();
        text.push_str(&format!("# role {role} {i} {}\n", list.join(" ")));
    }
    let path = dir.join(format!("{name}.txt"));
    fs::write(&path, text)?;
    Ok(path)
}
