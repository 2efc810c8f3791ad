//! Small residual-network flow solver used for vertex-disjoint paths.

use std::collections::VecDeque;

pub(crate) const INF: i32 = i32::MAX / 4;

#[derive(Clone, Debug, Default)]
pub(crate) struct Network {
    to: Vec<usize>,
    cap: Vec<i32>,
    cost: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    pub(crate) fn new(nodes: usize) -> Self {
        Self { adj: vec![Vec::new(); nodes], ..Self::default() }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize, cap: i32, cost: i64) -> usize {
        let e = self.to.len();
        self.to.extend([v, u]);
        self.cap.extend([cap, 0]);
        self.cost.extend([cost, -cost]);
        self.adj[u].push(e);
        self.adj[v].push(e + 1);
        e
    }

    /// Flow currently pushed through edge `e`.
    pub(crate) fn flow_on(&self, e: usize) -> i32 {
        self.cap[e ^ 1]
    }

    pub(crate) fn edge_slots(&self) -> usize {
        self.to.len()
    }

    pub(crate) fn head(&self, e: usize) -> usize {
        self.to[e]
    }

    pub(crate) fn out_edges(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Pushes unit augmenting paths by BFS until none is left or `limit` is hit.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut flow = 0;
        let mut prev = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    reached = true;
                    break;
                }
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && v != s && prev[v] == usize::MAX {
                        prev[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let e = prev[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// Successive shortest paths (Bellman-Ford): a maximum flow of minimum cost.
    pub(crate) fn min_cost_max_flow(&mut self, s: usize, t: usize) -> (i32, i64) {
        let nodes = self.adj.len();
        let (mut flow, mut total) = (0, 0i64);
        loop {
            let mut dist = vec![i64::MAX; nodes];
            let mut prev = vec![usize::MAX; nodes];
            let mut in_queue = vec![false; nodes];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                in_queue[u] = false;
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && dist[u] + self.cost[e] < dist[v] {
                        dist[v] = dist[u] + self.cost[e];
                        prev[v] = e;
                        if !in_queue[v] {
                            in_queue[v] = true;
                            queue.push_back(v);
                        }
                    }
                }
            }
            if dist[t] == i64::MAX {
                return (flow, total);
            }
            let mut push = INF;
            let mut v = t;
            while v != s {
                push = push.min(self.cap[prev[v]]);
                v = self.to[prev[v] ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = prev[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.to[e ^ 1];
            }
            flow += push;
            total += push as i64 * dist[t];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut net = Network::new(4);
        net.add_edge(0, 1, 1, 1);
        net.add_edge(0, 2, 1, 5);
        net.add_edge(1, 3, 1, 1);
        net.add_edge(2, 3, 1, 1);
        net.add_edge(1, 2, 1, 0);
        assert_eq!(net.clone().max_flow(0, 3, INF), 2);
        assert_eq!(net.clone().max_flow(0, 3, 1), 1);
        assert_eq!(net.min_cost_max_flow(0, 3), (2, 8));
    }
}
