# Tests package




