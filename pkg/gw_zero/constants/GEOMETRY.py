# Zero loci of split bundles on P^r: {'r': ambient dimension,
# 'convex': degrees l of O(l) summands, 'concave': degrees m of O(-m) summands}
QUINTIC = {'r': 4, 'convex': [5], 'concave': []}
CUBIC_SURFACE = {'r': 3, 'convex': [3], 'concave': []}
QUADRIC_INTERSECTION = {'r': 4, 'convex': [2, 2], 'concave': []}
BICUBIC = {'r': 5, 'convex': [3, 3], 'concave': []}
QUADRIC_QUARTIC = {'r': 5, 'convex': [2, 4], 'concave': []}
QUADRIC_QUADRIC_CUBIC = {'r': 6, 'convex': [2, 2, 3], 'concave': []}
FOUR_QUADRICS = {'r': 7, 'convex': [2, 2, 2, 2], 'concave': []}
LOCAL_P1 = {'r': 1, 'convex': [], 'concave': [1, 1]}
LOCAL_P2 = {'r': 2, 'convex': [], 'concave': [3]}
P1 = {'r': 1, 'convex': [], 'concave': []}
P2 = {'r': 2, 'convex': [], 'concave': []}
P4 = {'r': 4, 'convex': [], 'concave': []}

GEOMETRIES = {
    'quintic': QUINTIC,
    'cubic-surface': CUBIC_SURFACE,
    'quadric-intersection': QUADRIC_INTERSECTION,
    'bicubic': BICUBIC,
    'quadric-quartic': QUADRIC_QUARTIC,
    'quadric-quadric-cubic': QUADRIC_QUADRIC_CUBIC,
    'four-quadrics': FOUR_QUADRICS,
    'local-p1': LOCAL_P1,
    'local-p2': LOCAL_P2,
    'p1': P1,
    'p2': P2,
    'p4': P4,
}
