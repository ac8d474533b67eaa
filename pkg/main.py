import json
import logging
import os
from typing import Optional

import numpy as np
import streamlit as st
from dotenv import load_dotenv

from burge import encode
from cli import parse_shape
from crystal import ARRAYS, TABLEAUX, check_stembridge, crystal_for_shape
from graph import SimpleGraph, degree_sequence, is_threshold_graph, to_burge_array
from partition import is_hook, largest_hook
from pvfree import longest_pv_free_subarray, pv_report, LONGEST_SUBARRAY_CAP
from storage import StorageHandler, DEFAULT_RESULTS_DIR
from verify import SUITES, VerifyConfig, run_all

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

RESULTS_DIR = os.getenv("BURGE_RESULTS_DIR", DEFAULT_RESULTS_DIR)
DEFAULT_MAX_N = int(os.getenv("BURGE_DEFAULT_MAX_N", "4"))


def parse_edges(text: str) -> list:
    """Edges typed as `1-2, 1-3, 2-4`."""
    edges = []
    for chunk in text.replace(';', ',').split(','):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, sep, b = chunk.partition('-')
        if not sep:
            raise ValueError(f"edge {chunk!r} must look like a-b")
        edges.append((int(a), int(b)))
    return edges


def parse_graph(n: int, text: str) -> Optional[SimpleGraph]:
    try:
        return SimpleGraph.from_edges(n, parse_edges(text))
    except ValueError as e:
        logger.error(f"Error parsing graph: {str(e)}")
        st.error(f"Error parsing graph: {str(e)}")
        return None


def adjacency_matrix(graph: SimpleGraph) -> np.ndarray:
    matrix = np.zeros((graph.n, graph.n), dtype=int)
    for a, b in graph.edges:
        matrix[a - 1, b - 1] = matrix[b - 1, a - 1] = 1
    return matrix


def burge_page():
    st.title("Burge Correspondence")
    n = st.number_input("Number of vertices", min_value=1, max_value=12, value=4)
    text = st.text_input("Edges (comma-separated a-b pairs)", value="1-2, 1-3, 2-3, 2-4")
    graph = parse_graph(int(n), text)
    if graph is None:
        return

    array = to_burge_array(graph)
    tableau = encode(array)
    report = pv_report(array)

    col1, col2, col3 = st.columns(3)
    with col1:
        st.metric("Edges", graph.edge_count)
    with col2:
        st.metric("Shape", str(tableau.shape))
    with col3:
        st.metric("PV-free", "yes" if report["pv_free"] else "no")

    tabs = st.tabs(["Burge array", "Tableau", "Degrees"])
    with tabs[0]:
        st.table(np.array([array.top, array.bottom]) if len(array) else np.zeros((2, 0), dtype=int))
        st.write("Peak:", report["peak"])
        st.write("Valley:", report["valley"])
        if len(array) <= LONGEST_SUBARRAY_CAP:
            st.write("Longest PV-free subsequence:", longest_pv_free_subarray(array))
    with tabs[1]:
        st.code("\n".join(" ".join(str(v) for v in row) for row in tableau.rows) or "(empty)")
        st.write("Hook shape:", is_hook(tableau.shape))
        st.write("Largest hook contained:", str(largest_hook(tableau.shape)))
    with tabs[2]:
        st.write("Degree sequence:", list(degree_sequence(graph)))
        st.write("Threshold graph:", is_threshold_graph(graph))
        st.dataframe(adjacency_matrix(graph))


def crystal_page():
    st.title("Crystal Explorer")
    objects = st.sidebar.radio("Objects", ["arrays", "tableaux"])
    shape_text = st.text_input("Shape", value="2,1,1")
    max_letter = st.number_input("Largest letter", min_value=2, max_value=6, value=4)
    try:
        shape = parse_shape(shape_text)
        crystal = crystal_for_shape(shape, int(max_letter), ARRAYS if objects == "arrays" else TABLEAUX)
    except ValueError as e:
        logger.error(f"Error generating crystal: {str(e)}")
        st.error(f"Error generating crystal: {str(e)}")
        return

    report = check_stembridge(crystal)
    col1, col2, col3 = st.columns(3)
    with col1:
        st.metric("Vertices", len(crystal))
    with col2:
        st.metric("Edges", len(crystal.edges))
    with col3:
        st.metric("Axiom violations", len(report.violations))

    tabs = st.tabs(["Graph", "JSON", "Stembridge report"])
    with tabs[0]:
        dot = crystal.to_dot()
        st.graphviz_chart(dot)
        st.download_button("Download DOT", dot, file_name="crystal.dot")
    with tabs[1]:
        st.code(json.dumps(crystal.to_json(), indent=2), language='json')
    with tabs[2]:
        st.json(report.to_json())


def verification_page():
    st.title("Verification")
    storage = StorageHandler(RESULTS_DIR)
    max_n = st.slider("Largest vertex count", min_value=1, max_value=6, value=DEFAULT_MAX_N)
    selected = st.multiselect("Suites", list(SUITES), default=list(SUITES))

    if st.button("Run"):
        with st.spinner("Running verification suites..."):
            try:
                report = run_all(VerifyConfig(max_n=max_n), selected)
            except ValueError as e:
                logger.error(f"Error running verification: {str(e)}")
                st.error(f"Error running verification: {str(e)}")
                return
        st.session_state.verify_report = report.to_json(timings=True)
        filename = storage.save_report(st.session_state.verify_report, max_n)
        st.success(f"Saved to {filename}")

    if 'verify_report' in st.session_state:
        for suite in st.session_state.verify_report['suites']:
            status = "PASS" if suite['ok'] else "FAIL"
            with st.expander(f"{status} {suite['name']} ({suite['checked']} checks, {suite['seconds']}s)"):
                for message in suite['failures']:
                    st.write(f"- {message}")

    st.markdown("---")
    st.header("Stored reports")
    reports = storage.list_reports()
    if not reports:
        st.info("No stored reports yet.")
        return
    chosen = st.selectbox("Report", reports[::-1])
    stored = storage.get_report(chosen)
    if stored is None:
        st.error(f"Could not read {chosen}")
    else:
        st.json(stored)


def main():
    st.set_page_config(page_title="Burge Explorer", layout="wide")
    page = st.sidebar.selectbox("Choose a page", ["Burge Correspondence", "Crystal Explorer", "Verification"])
    if page == "Burge Correspondence":
        burge_page()
    elif page == "Crystal Explorer":
        crystal_page()
    else:
        verification_page()


if __name__ == "__main__":
    main()
