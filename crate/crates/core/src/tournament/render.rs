//! Bracket drawings of a family, as box-drawing text or a LaTeX picture.

use std::fmt::Write;

use super::family::MaximalCommutingFamily;
use crate::labels::LabelSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Tex,
}

struct Node {
    set: LabelSet,
    level: usize,
    x: usize,
    children: Option<(usize, usize)>,
}

/// Leaves left to right, children ordered by their minimum label.
fn layout(family: &MaximalCommutingFamily, set: LabelSet, next_leaf: &mut usize, nodes: &mut Vec<Node>) -> usize {
    if set.len() == 1 {
        let x = *next_leaf;
        *next_leaf += 1;
        nodes.push(Node { set, level: 0, x, children: None });
        return nodes.len() - 1;
    }
    let (a, b) = family.children(set);
    let l = layout(family, a, next_leaf, nodes);
    let r = layout(family, b, next_leaf, nodes);
    let level = 1 + nodes[l].level.max(nodes[r].level);
    nodes.push(Node { set, level, x: 0, children: Some((l, r)) });
    nodes.len() - 1
}

fn nodes_of(family: &MaximalCommutingFamily) -> (Vec<Node>, usize) {
    let mut nodes = Vec::new();
    let mut leaf = 0;
    let root = layout(family, family.labels(), &mut leaf, &mut nodes);
    // Leaves four columns apart; nodes are in post-order, so children come
    // before their game.
    for node in nodes.iter_mut() {
        if node.children.is_none() {
            node.x *= 4;
        }
    }
    for i in 0..nodes.len() {
        if let Some((l, r)) = nodes[i].children {
            nodes[i].x = (nodes[l].x + nodes[r].x) / 2;
        }
    }
    (nodes, root)
}

pub fn render_family(family: &MaximalCommutingFamily, winner: Option<u32>, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(family, winner),
        RenderFormat::Tex => render_tex(family, winner),
    }
}

fn on_winning_path(set: LabelSet, winner: Option<u32>) -> bool {
    winner.is_some_and(|w| set.contains(w))
}

fn render_ascii(family: &MaximalCommutingFamily, winner: Option<u32>) -> String {
    let (nodes, root) = nodes_of(family);
    let height = nodes[root].level;
    let width = nodes.iter().map(|n| n.x).max().unwrap() + 3;
    let rows = 2 * height + 2;
    let mut grid = vec![vec![' '; width]; rows];
    let row_of = |level: usize| 2 * (height - level) + 1;
    let parent_row = |i: usize| {
        nodes
            .iter()
            .find(|p| p.children.is_some_and(|(l, r)| l == i || r == i))
            .map_or(0, |p| row_of(p.level))
    };
    for (i, node) in nodes.iter().enumerate() {
        let top = if i == root { 0 } else { parent_row(i) + 1 };
        let bottom = match node.children {
            Some(_) => row_of(node.level),
            None => rows - 1,
        };
        let bar = if on_winning_path(node.set, winner) { '┃' } else { '│' };
        for row in grid.iter_mut().take(bottom).skip(top) {
            row[node.x] = bar;
        }
        if let Some((l, r)) = node.children {
            let y = row_of(node.level);
            grid[y][nodes[l].x..=nodes[r].x].fill('─');
            grid[y][nodes[l].x] = '┌';
            grid[y][nodes[r].x] = '┐';
            grid[y][node.x] = '┴';
        } else {
            let label = node.set.min_label().unwrap().to_string();
            let start = node.x.saturating_sub((label.len() - 1) / 2);
            for (k, ch) in label.chars().enumerate() {
                grid[rows - 1][start + k] = ch;
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    if let Some(w) = winner {
        let _ = writeln!(out, "winner: {w}");
    }
    out
}

fn render_tex(family: &MaximalCommutingFamily, winner: Option<u32>) -> String {
    let (nodes, root) = nodes_of(family);
    let height = nodes[root].level;
    let width = nodes.iter().map(|n| n.x).max().unwrap();
    let parent_level = |i: usize| {
        nodes.iter().find(|p| p.children.is_some_and(|(l, r)| l == i || r == i)).map_or(height + 1, |p| p.level)
    };
    let mut body = String::new();
    for (i, node) in nodes.iter().enumerate() {
        let from = 2 * node.level;
        let to = 2 * parent_level(i);
        let line = format!("\\put({},{}){{\\line(0,1){{{}}}}}", node.x, from, to - from);
        if on_winning_path(node.set, winner) {
            let _ = writeln!(body, "{{\\linethickness{{1.2pt}}{line}}}");
        } else {
            let _ = writeln!(body, "{line}");
        }
        match node.children {
            Some((l, r)) => {
                let _ = writeln!(body, "\\put({},{}){{\\line(1,0){{{}}}}}", nodes[l].x, from, nodes[r].x - nodes[l].x);
            }
            None => {
                let _ = writeln!(body, "\\put({},-1){{\\makebox(0,0){{${}$}}}}", node.x, node.set.min_label().unwrap());
            }
        }
    }
    let mut out = String::new();
    out.push_str("\\documentclass{article}\n\\begin{document}\n\\setlength{\\unitlength}{2mm}\n");
    let _ = writeln!(out, "\\begin{{picture}}({},{})(-2,-2)", width + 4, 2 * height + 5);
    out.push_str(&body);
    out.push_str("\\end{picture}\n\\end{document}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_two_teams() {
        let f = MaximalCommutingFamily::parse_full("{0,1}").unwrap();
        let text = render_family(&f, None, RenderFormat::Ascii);
        assert_eq!(text, "  │\n┌─┴─┐\n│   │\n0   1\n");
    }

    #[test]
    fn winner_path_is_heavy() {
        let f = MaximalCommutingFamily::parse_full("{0,1}").unwrap();
        let text = render_family(&f, Some(1), RenderFormat::Ascii);
        assert_eq!(text, "  ┃\n┌─┴─┐\n│   ┃\n0   1\nwinner: 1\n");
    }

    #[test]
    fn tex_is_a_document() {
        let f = MaximalCommutingFamily::parse_full("{0,1};{0,1,2}").unwrap();
        let text = render_family(&f, Some(0), RenderFormat::Tex);
        assert!(text.starts_with("\\documentclass{article}"));
        assert!(text.trim_end().ends_with("\\end{document}"));
        assert_eq!(text.matches("\\makebox").count(), 3);
    }
}
