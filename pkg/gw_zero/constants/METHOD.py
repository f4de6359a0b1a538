LOCALIZATION = 'localization'
MIRROR = 'mirror'
BOTH = 'both'

EULER = 'euler'
CHERN_POLYNOMIAL = 'chern-polynomial'

TABLE = 'table'
JSON = 'json'

TWIST_NONE = 'none'
TWIST_FULL = 'full'
TWIST_KERNEL = 'kernel'
