from typing import Dict, List

from gw_zero.localization.cache import GraphCache


def inspect_cache(directory: str) -> List[Dict]:
    """One entry per cache file: key, graph count and whether it parses"""
    return GraphCache(directory).inspect()


def clear_cache(directory: str) -> int:
    """Delete every graph cache file in `directory`; returns how many were removed"""
    return GraphCache(directory).clear()
