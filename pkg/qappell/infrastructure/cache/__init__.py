# Cache package
