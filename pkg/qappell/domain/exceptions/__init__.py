# Domain exceptions package
