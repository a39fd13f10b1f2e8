use super::{Graph, Vertex};

/// Block–cut decomposition. Bridges appear as two-vertex blocks; isolated
/// vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the biconnected components, each sorted, the list
    /// sorted lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    /// Number of cut vertices lying in block `i`.
    pub fn cut_count(&self, i: usize) -> usize {
        self.blocks[i].iter().filter(|v| self.cut_vertices.binary_search(v).is_ok()).count()
    }

    /// Indices of blocks containing at most one cut vertex (leaves of the
    /// block–cut tree, plus blocks forming a whole component).
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.cut_count(i) <= 1).collect()
    }
}

/// Computes blocks and cut vertices with an iterative edge-stack DFS.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out: Vec<Vec<Vertex>> = Vec::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*idx) {
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                out.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    out.sort();
    BlockDecomposition {
        blocks: out,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}
