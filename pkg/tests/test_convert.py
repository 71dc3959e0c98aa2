"""
Word -> matrix streaming conversion and the window scan back to words
"""
import pytest
from hypothesis import given

from src.convert import MatrixBuilder, Window, check_window, get_dyck_word, get_matrix, iter_word_from_rows
from src.dyck_core import Alphabet, Symbol, enumerate_words, iter_symbols, parse_word
from src.errors import (
    EmptyColumn,
    EmptyWord,
    InvalidChar,
    InvalidMatrix,
    M2Violation,
    PrefixViolation,
    Unbalanced,
)
from src.matrix import validate_matrix
from tests.test_dyck_core import dyck_words

RUNNING_MATRIX = ((1, 1, 1, 0, 0), (1, 0, 0, 1, 0), (0, 0, 0, 0, 1))


def test_running_example_forward():
    assert get_matrix("xxxDDxDDxD").rows == RUNNING_MATRIX


def test_running_example_step_by_step():
    """A row appears at each valley; earlier rows grow as columns are added"""
    builder = MatrixBuilder()
    snapshots = []
    for symbol in iter_symbols("xxxDDxDDxD"):
        rows_before = len(builder.snapshot())
        builder.feed(symbol)
        if len(builder.snapshot()) > rows_before:
            snapshots.append(builder.snapshot())
    assert snapshots == [((1, 1, 1),), ((1, 1, 1, 0), (1, 0, 0, 1))]
    assert builder.finish().rows == RUNNING_MATRIX


@pytest.mark.parametrize(
    'text, rows',
    (
        ("xD", ((1,),)),
        ("xxDxDD", ((1, 1, 0), (1, 0, 1))),
        ("xDxD", ((1, 0), (0, 1))),
        ("xxDD", ((1, 1),)),
    ),
)
def test_small_words_forward(text, rows):
    assert get_matrix(text).rows == rows


def test_get_matrix_consumes_a_single_use_stream():
    assert get_matrix(iter("xxDxDD")).rows == ((1, 1, 0), (1, 0, 1))


def test_get_matrix_with_alphabet():
    assert get_matrix("(()())", Alphabet.from_pair("()")).rows == ((1, 1, 0), (1, 0, 1))


@pytest.mark.parametrize(
    'text, error',
    (
        ("", EmptyWord),
        ("xDD", PrefixViolation),
        ("xxDxD", Unbalanced),
        ("xxx", Unbalanced),
        ("xDq", InvalidChar),
    ),
)
def test_get_matrix_errors(text, error):
    with pytest.raises(error):
        get_matrix(text)


def test_prefix_violation_position():
    with pytest.raises(PrefixViolation) as excinfo:
        get_matrix("xxDDDx")
    assert excinfo.value.position == 5


def test_unbalanced_counts():
    with pytest.raises(Unbalanced) as excinfo:
        get_matrix("xxDxD")
    assert (excinfo.value.x_count, excinfo.value.d_count) == (3, 2)


def test_builder_cannot_be_reused():
    builder = MatrixBuilder()
    builder.feed(Symbol.X)
    builder.feed(Symbol.D)
    builder.finish()
    with pytest.raises(RuntimeError):
        builder.feed(Symbol.X)
    with pytest.raises(RuntimeError):
        builder.finish()


@pytest.mark.parametrize(
    'above, below, symbol',
    ((1, 0, Symbol.D), (0, 1, Symbol.X), (0, 0, None), (1, 1, None)),
)
def test_check_window(above, below, symbol):
    assert check_window(above, below) is symbol


def test_window_rejects_non_bits():
    with pytest.raises(ValueError):
        Window(2, 0)


def test_running_example_backward():
    assert str(get_dyck_word(validate_matrix(RUNNING_MATRIX))) == "xxxDDxDDxD"


def test_get_dyck_word_validates_raw_grids():
    assert str(get_dyck_word([[1]])) == "xD"
    with pytest.raises(InvalidMatrix) as excinfo:
        get_dyck_word([[1, 1, 1, 0, 0], [1, 0, 0, 1, 1], [0, 0, 0, 0, 1]])
    assert isinstance(excinfo.value.cause, M2Violation)
    assert excinfo.value.cause.i == 2


def test_row_stream_matches_whole_matrix():
    assert "".join(iter_word_from_rows(iter(RUNNING_MATRIX))) == "xxxDDxDDxD"


def test_row_stream_stops_at_first_bad_row():
    """Nothing is produced for a row that fails validation"""
    rows = iter([[1, 1, 1, 0, 0], [1, 0, 0, 1, 1], [0, 0, 0, 0, 1]])
    produced = []
    with pytest.raises(InvalidMatrix):
        for symbol in iter_word_from_rows(rows):
            produced.append(symbol)
    assert "".join(produced) == "xxxDDxx"


def test_row_stream_needs_rows():
    with pytest.raises(InvalidMatrix):
        list(iter_word_from_rows([]))


@pytest.mark.parametrize('grid', ([[1, 0, 0, 0]], [[1, 0, 0], [0, 1, 0]]))
def test_zero_columns_have_no_word(grid):
    """A trailing all-zero column would drop its x and D"""
    with pytest.raises(InvalidMatrix) as excinfo:
        get_dyck_word(grid)
    assert isinstance(excinfo.value.cause, EmptyColumn)
    with pytest.raises(InvalidMatrix) as excinfo:
        list(iter_word_from_rows(iter(grid)))
    assert isinstance(excinfo.value.cause, EmptyColumn)


@given(dyck_words(max_n=10))
def test_word_round_trip(text):
    word = parse_word(text)
    matrix = get_matrix(word.symbols)
    assert get_dyck_word(matrix) == word
    assert get_matrix(get_dyck_word(matrix).symbols) == matrix
    assert matrix.k == word.semilength
    assert matrix.n == word.peaks


@pytest.mark.parametrize('n', range(1, 11))
def test_bijection_by_semilength(n):
    """Both round trips hold and distinct words give distinct matrices"""
    counts = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132, 7: 429, 8: 1430, 9: 4862, 10: 16796}
    matrices = set()
    for word in enumerate_words(n):
        matrix = get_matrix(word.symbols)
        assert get_dyck_word(matrix) == word
        matrices.add(matrix)
    assert len(matrices) == counts[n]


def test_window_rows_emit_descents_before_slopes():
    for word in enumerate_words(6):
        view = get_matrix(word.symbols).padded_view()
        for i in range(1, len(view)):
            emitted = "".join(s for s in map(check_window, view.row(i - 1), view.row(i)) if s)
            assert "xD" not in emitted
            if i == 1:
                assert "D" not in emitted
