import json
import os
import re
from typing import Dict, List, Optional, Tuple

from gw_zero import GW_LOGGER
from gw_zero.constants import INTERNAL
from gw_zero.exceptions import GraphCacheError
from gw_zero.localization.FixedGraph import FixedGraph
from gw_zero.localization.graphs import enumerate_graphs

_FILE_PATTERN = re.compile(
    rf'^{INTERNAL.GRAPH_CACHE_PREFIX}_r(\d+)_d(\d+)_m(\d+)\.json$'
)


def _check_graphs(path: str, graphs: List[FixedGraph], r: int, d: int, marks: int) -> None:
    """
    Per-graph consistency with the file key: degree, marks, labels, canonical form
    and automorphism order. Completeness is left to `GraphCache.validate`.
    """
    codes = set()
    for graph in graphs:
        if graph.degree != d or graph.marks != marks:
            raise GraphCacheError(
                f'Graph {graph} in {path} does not have degree {d} and {marks} marks'
            )
        if any(not 0 <= label <= r for label in graph.labels):
            raise GraphCacheError(f'Graph {graph} in {path} has a label outside 0..{r}')
        try:
            canonical = FixedGraph.canonical(graph.labels, graph.edges, graph.mark)
        except (KeyError, ValueError) as exc:
            raise GraphCacheError(f'Graph {graph} in {path} is not a valid tree: {exc}') from exc
        if canonical != graph:
            raise GraphCacheError(
                f'Graph {graph} in {path} is not canonical or has a wrong automorphism order'
            )
        codes.add(graph.code())
    if len(codes) != len(graphs):
        raise GraphCacheError(f'Graph cache file {path} lists an isomorphism class twice')


class GraphCache:
    """
    Enumerated fixed-point graph sets persisted as versioned JSON files, one per
    (r, d, marks). A file with the wrong version, key or content is regenerated.
    """

    def __init__(self, directory: str):
        self.directory = os.path.abspath(os.path.expanduser(directory))

    def path_for(self, r: int, d: int, marks: int) -> str:
        filename = f'{INTERNAL.GRAPH_CACHE_PREFIX}_r{r}_d{d}_m{marks}.json'
        return os.path.join(self.directory, filename)

    def _read(self, path: str, key: Optional[Dict] = None) -> List[FixedGraph]:
        """Parse one cache file, raising GraphCacheError on anything unexpected"""
        try:
            with open(path, 'r') as f:
                payload = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise GraphCacheError(f'Unreadable graph cache file {path}: {exc}') from exc

        if not isinstance(payload, dict):
            raise GraphCacheError(f'Graph cache file {path} does not hold a JSON object')
        version = payload.get('format_version')
        if version != INTERNAL.GRAPH_CACHE_FORMAT_VERSION:
            raise GraphCacheError(
                f'Graph cache file {path} has format version {version}, '
                f'expected {INTERNAL.GRAPH_CACHE_FORMAT_VERSION}'
            )
        if key is not None and payload.get('key') != key:
            raise GraphCacheError(
                f'Graph cache file {path} is keyed {payload.get("key")}, expected {key}'
            )
        try:
            graphs = [FixedGraph.from_dict(entry) for entry in payload['graphs']]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise GraphCacheError(f'Malformed graph entry in {path}: {exc}') from exc
        if key is not None:
            _check_graphs(path, graphs, key['r'], key['d'], key['marks'])
        return graphs

    def load(self, r: int, d: int, marks: int) -> Optional[List[FixedGraph]]:
        path = self.path_for(r, d, marks)
        if not os.path.exists(path):
            return None
        try:
            return self._read(path, {'r': r, 'd': d, 'marks': marks})
        except GraphCacheError as exc:
            GW_LOGGER.warning(f'{exc}; regenerating')
            return None

    def save(self, r: int, d: int, marks: int, graphs: List[FixedGraph]) -> str:
        os.makedirs(self.directory, exist_ok=True)
        path = self.path_for(r, d, marks)
        payload = {
            'format_version': INTERNAL.GRAPH_CACHE_FORMAT_VERSION,
            'key': {'r': r, 'd': d, 'marks': marks},
            'graphs': [graph.to_dict() for graph in graphs],
        }
        with open(path, 'w') as f:
            json.dump(payload, f, indent=2, sort_keys=True)
        return path

    def get_or_enumerate(self, r: int, d: int, marks: int) -> List[FixedGraph]:
        graphs = self.load(r, d, marks)
        if graphs is not None:
            GW_LOGGER.info(f'Graph cache hit for r={r}, d={d}, marks={marks}')
            return graphs
        GW_LOGGER.info(f'Graph cache miss for r={r}, d={d}, marks={marks}')
        graphs = enumerate_graphs(r, d, marks)
        self.save(r, d, marks, graphs)
        return graphs

    def files(self) -> List[Tuple[str, Tuple[int, int, int]]]:
        """Cache files in the directory with the (r, d, marks) key read from their names"""
        if not os.path.isdir(self.directory):
            return []
        found = []
        for name in sorted(os.listdir(self.directory)):
            match = _FILE_PATTERN.match(name)
            if match:
                key = tuple(int(g) for g in match.groups())
                found.append((os.path.join(self.directory, name), key))
        return found

    def inspect(self) -> List[Dict]:
        entries = []
        for path, (r, d, marks) in self.files():
            entry = {'file': os.path.basename(path), 'r': r, 'd': d, 'marks': marks}
            try:
                entry['graphs'] = len(self._read(path, {'r': r, 'd': d, 'marks': marks}))
                entry['valid'] = True
            except GraphCacheError as exc:
                entry['graphs'] = None
                entry['valid'] = False
                entry['error'] = str(exc)
            entries.append(entry)
        return entries

    def clear(self) -> int:
        removed = 0
        for path, _ in self.files():
            os.remove(path)
            removed += 1
        GW_LOGGER.info(f'Removed {removed} graph cache files from {self.directory}')
        return removed

    def validate(self) -> List[Tuple[str, Optional[str]]]:
        """
        Compare every cache file against a fresh enumeration.

        :return: (file name, problem) pairs, problem None for a valid file
        """
        report = []
        for path, (r, d, marks) in self.files():
            name = os.path.basename(path)
            try:
                cached = self._read(path, {'r': r, 'd': d, 'marks': marks})
            except GraphCacheError as exc:
                report.append((name, str(exc)))
                continue
            if cached != enumerate_graphs(r, d, marks):
                report.append((name, 'cached graphs differ from a fresh enumeration'))
            else:
                report.append((name, None))
        return report
