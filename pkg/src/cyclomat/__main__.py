import sys
sys.exit(__import__("cyclomat.cli", fromlist=["main"]).main())
