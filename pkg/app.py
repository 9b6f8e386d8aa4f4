import sys
from app.main import main

# Permite ejecutar el CLI con `python app.py <subcomando>`
if __name__ == "__main__":
    sys.exit(main())
