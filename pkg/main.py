import sys
from typing import Optional, Sequence

from src.errors import register_all_errors
from src.middleware import register_middleware
from src.routers import CommandApp
from src.routers import ctable, dirichlet, gsp6, order, verify, w

description = """
Exact arithmetic for the Spin L-function integral on GSp6.
Quaternion orders and ternary forms, the Freudenthal triple system over a cubic Jordan
algebra, the GSp6 embedding, the Hermitian-space identities, the differential operator
D0 and the constant-term c-function table, with property suites for all of them.
"""


app = CommandApp(prog="fgsp6", description=description)


# Register error handlers and middleware
register_all_errors(app.errors)
register_middleware(app)


app.include_router(order.router, prefix="order", help="Quaternion orders from ternary forms")
app.include_router(w.router, prefix="w", help="Elements of the Freudenthal triple system W")
app.include_router(gsp6.router, prefix="gsp6", help="The embedding of GSp6 into the similitude group of W")
app.include_router(ctable.router, prefix="ctable", help="Constant-term c-functions and the functional equation")
app.include_router(dirichlet.router, prefix="dirichlet", help="Dirichlet-series coefficient bookkeeping")
app.include_router(verify.router, prefix="verify", help="Property suites")


def main(argv: Optional[Sequence[str]] = None) -> int:
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
