import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI

from app import __version__
from app.config import DATABASE_URL
from app.database.connection import create_db_tables
from app.routers import census, decompositions

logger = logging.getLogger(__name__)


# --- Lifespan Management ---
@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    起動時に census テーブルを作成する
    """
    logger.info("Connecting to database: %s", DATABASE_URL)
    create_db_tables()
    logger.info("Census tables checked/created.")
    yield
    logger.info("Application shutdown.")


# --- FastAPI App Initialization ---
app = FastAPI(
    title="Gallai Paths API",
    description="Path decompositions of complete graphs and of K_n minus small subgraphs.",
    version=__version__,
    lifespan=lifespan,
)

# --- Include Routers ---
app.include_router(decompositions.router)
app.include_router(census.router)


# --- Root Endpoint ---
@app.get("/", tags=["Root"])
async def root():
    """
    Welcome endpoint.
    """
    return {"message": "Welcome to Gallai Paths API"}
