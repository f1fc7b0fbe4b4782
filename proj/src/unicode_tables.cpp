// Generated by scripts/gen_unicode_tables.py -- do not edit.
// Unicode character database version 13.0.0.

#include "unicode_tables.hpp"

namespace rnck::unicode {

const char32_t decomposition_data[3406] = {
  0x0041, 0x0300, 0x0041, 0x0301, 0x0041, 0x0302, 0x0041, 0x0303, 0x0041, 0x0308, 0x0041, 0x030A,
  0x0043, 0x0327, 0x0045, 0x0300, 0x0045, 0x0301, 0x0045, 0x0302, 0x0045, 0x0308, 0x0049, 0x0300,
  0x0049, 0x0301, 0x0049, 0x0302, 0x0049, 0x0308, 0x004E, 0x0303, 0x004F, 0x0300, 0x004F, 0x0301,
  0x004F, 0x0302, 0x004F, 0x0303, 0x004F, 0x0308, 0x0055, 0x0300, 0x0055, 0x0301, 0x0055, 0x0302,
  0x0055, 0x0308, 0x0059, 0x0301, 0x0061, 0x0300, 0x0061, 0x0301, 0x0061, 0x0302, 0x0061, 0x0303,
  0x0061, 0x0308, 0x0061, 0x030A, 0x0063, 0x0327, 0x0065, 0x0300, 0x0065, 0x0301, 0x0065, 0x0302,
  0x0065, 0x0308, 0x0069, 0x0300, 0x0069, 0x0301, 0x0069, 0x0302, 0x0069, 0x0308, 0x006E, 0x0303,
  0x006F, 0x0300, 0x006F, 0x0301, 0x006F, 0x0302, 0x006F, 0x0303, 0x006F, 0x0308, 0x0075, 0x0300,
  0x0075, 0x0301, 0x0075, 0x0302, 0x0075, 0x0308, 0x0079, 0x0301, 0x0079, 0x0308, 0x0041, 0x0304,
  0x0061, 0x0304, 0x0041, 0x0306, 0x0061, 0x0306, 0x0041, 0x0328, 0x0061, 0x0328, 0x0043, 0x0301,
  0x0063, 0x0301, 0x0043, 0x0302, 0x0063, 0x0302, 0x0043, 0x0307, 0x0063, 0x0307, 0x0043, 0x030C,
  0x0063, 0x030C, 0x0044, 0x030C, 0x0064, 0x030C, 0x0045, 0x0304, 0x0065, 0x0304, 0x0045, 0x0306,
  0x0065, 0x0306, 0x0045, 0x0307, 0x0065, 0x0307, 0x0045, 0x0328, 0x0065, 0x0328, 0x0045, 0x030C,
  0x0065, 0x030C, 0x0047, 0x0302, 0x0067, 0x0302, 0x0047, 0x0306, 0x0067, 0x0306, 0x0047, 0x0307,
  0x0067, 0x0307, 0x0047, 0x0327, 0x0067, 0x0327, 0x0048, 0x0302, 0x0068, 0x0302, 0x0049, 0x0303,
  0x0069, 0x0303, 0x0049, 0x0304, 0x0069, 0x0304, 0x0049, 0x0306, 0x0069, 0x0306, 0x0049, 0x0328,
  0x0069, 0x0328, 0x0049, 0x0307, 0x004A, 0x0302, 0x006A, 0x0302, 0x004B, 0x0327, 0x006B, 0x0327,
  0x004C, 0x0301, 0x006C, 0x0301, 0x004C, 0x0327, 0x006C, 0x0327, 0x004C, 0x030C, 0x006C, 0x030C,
  0x004E, 0x0301, 0x006E, 0x0301, 0x004E, 0x0327, 0x006E, 0x0327, 0x004E, 0x030C, 0x006E, 0x030C,
  0x004F, 0x0304, 0x006F, 0x0304, 0x004F, 0x0306, 0x006F, 0x0306, 0x004F, 0x030B, 0x006F, 0x030B,
  0x0052, 0x0301, 0x0072, 0x0301, 0x0052, 0x0327, 0x0072, 0x0327, 0x0052, 0x030C, 0x0072, 0x030C,
  0x0053, 0x0301, 0x0073, 0x0301, 0x0053, 0x0302, 0x0073, 0x0302, 0x0053, 0x0327, 0x0073, 0x0327,
  0x0053, 0x030C, 0x0073, 0x030C, 0x0054, 0x0327, 0x0074, 0x0327, 0x0054, 0x030C, 0x0074, 0x030C,
  0x0055, 0x0303, 0x0075, 0x0303, 0x0055, 0x0304, 0x0075, 0x0304, 0x0055, 0x0306, 0x0075, 0x0306,
  0x0055, 0x030A, 0x0075, 0x030A, 0x0055, 0x030B, 0x0075, 0x030B, 0x0055, 0x0328, 0x0075, 0x0328,
  0x0057, 0x0302, 0x0077, 0x0302, 0x0059, 0x0302, 0x0079, 0x0302, 0x0059, 0x0308, 0x005A, 0x0301,
  0x007A, 0x0301, 0x005A, 0x0307, 0x007A, 0x0307, 0x005A, 0x030C, 0x007A, 0x030C, 0x004F, 0x031B,
  0x006F, 0x031B, 0x0055, 0x031B, 0x0075, 0x031B, 0x0041, 0x030C, 0x0061, 0x030C, 0x0049, 0x030C,
  0x0069, 0x030C, 0x004F, 0x030C, 0x006F, 0x030C, 0x0055, 0x030C, 0x0075, 0x030C, 0x0055, 0x0308,
  0x0304, 0x0075, 0x0308, 0x0304, 0x0055, 0x0308, 0x0301, 0x0075, 0x0308, 0x0301, 0x0055, 0x0308,
  0x030C, 0x0075, 0x0308, 0x030C, 0x0055, 0x0308, 0x0300, 0x0075, 0x0308, 0x0300, 0x0041, 0x0308,
  0x0304, 0x0061, 0x0308, 0x0304, 0x0041, 0x0307, 0x0304, 0x0061, 0x0307, 0x0304, 0x00C6, 0x0304,
  0x00E6, 0x0304, 0x0047, 0x030C, 0x0067, 0x030C, 0x004B, 0x030C, 0x006B, 0x030C, 0x004F, 0x0328,
  0x006F, 0x0328, 0x004F, 0x0328, 0x0304, 0x006F, 0x0328, 0x0304, 0x01B7, 0x030C, 0x0292, 0x030C,
  0x006A, 0x030C, 0x0047, 0x0301, 0x0067, 0x0301, 0x004E, 0x0300, 0x006E, 0x0300, 0x0041, 0x030A,
  0x0301, 0x0061, 0x030A, 0x0301, 0x00C6, 0x0301, 0x00E6, 0x0301, 0x00D8, 0x0301, 0x00F8, 0x0301,
  0x0041, 0x030F, 0x0061, 0x030F, 0x0041, 0x0311, 0x0061, 0x0311, 0x0045, 0x030F, 0x0065, 0x030F,
  0x0045, 0x0311, 0x0065, 0x0311, 0x0049, 0x030F, 0x0069, 0x030F, 0x0049, 0x0311, 0x0069, 0x0311,
  0x004F, 0x030F, 0x006F, 0x030F, 0x004F, 0x0311, 0x006F, 0x0311, 0x0052, 0x030F, 0x0072, 0x030F,
  0x0052, 0x0311, 0x0072, 0x0311, 0x0055, 0x030F, 0x0075, 0x030F, 0x0055, 0x0311, 0x0075, 0x0311,
  0x0053, 0x0326, 0x0073, 0x0326, 0x0054, 0x0326, 0x0074, 0x0326, 0x0048, 0x030C, 0x0068, 0x030C,
  0x0041, 0x0307, 0x0061, 0x0307, 0x0045, 0x0327, 0x0065, 0x0327, 0x004F, 0x0308, 0x0304, 0x006F,
  0x0308, 0x0304, 0x004F, 0x0303, 0x0304, 0x006F, 0x0303, 0x0304, 0x004F, 0x0307, 0x006F, 0x0307,
  0x004F, 0x0307, 0x0304, 0x006F, 0x0307, 0x0304, 0x0059, 0x0304, 0x0079, 0x0304, 0x0300, 0x0301,
  0x0313, 0x0308, 0x0301, 0x02B9, 0x003B, 0x00A8, 0x0301, 0x0391, 0x0301, 0x00B7, 0x0395, 0x0301,
  0x0397, 0x0301, 0x0399, 0x0301, 0x039F, 0x0301, 0x03A5, 0x0301, 0x03A9, 0x0301, 0x03B9, 0x0308,
  0x0301, 0x0399, 0x0308, 0x03A5, 0x0308, 0x03B1, 0x0301, 0x03B5, 0x0301, 0x03B7, 0x0301, 0x03B9,
  0x0301, 0x03C5, 0x0308, 0x0301, 0x03B9, 0x0308, 0x03C5, 0x0308, 0x03BF, 0x0301, 0x03C5, 0x0301,
  0x03C9, 0x0301, 0x03D2, 0x0301, 0x03D2, 0x0308, 0x0415, 0x0300, 0x0415, 0x0308, 0x0413, 0x0301,
  0x0406, 0x0308, 0x041A, 0x0301, 0x0418, 0x0300, 0x0423, 0x0306, 0x0418, 0x0306, 0x0438, 0x0306,
  0x0435, 0x0300, 0x0435, 0x0308, 0x0433, 0x0301, 0x0456, 0x0308, 0x043A, 0x0301, 0x0438, 0x0300,
  0x0443, 0x0306, 0x0474, 0x030F, 0x0475, 0x030F, 0x0416, 0x0306, 0x0436, 0x0306, 0x0410, 0x0306,
  0x0430, 0x0306, 0x0410, 0x0308, 0x0430, 0x0308, 0x0415, 0x0306, 0x0435, 0x0306, 0x04D8, 0x0308,
  0x04D9, 0x0308, 0x0416, 0x0308, 0x0436, 0x0308, 0x0417, 0x0308, 0x0437, 0x0308, 0x0418, 0x0304,
  0x0438, 0x0304, 0x0418, 0x0308, 0x0438, 0x0308, 0x041E, 0x0308, 0x043E, 0x0308, 0x04E8, 0x0308,
  0x04E9, 0x0308, 0x042D, 0x0308, 0x044D, 0x0308, 0x0423, 0x0304, 0x0443, 0x0304, 0x0423, 0x0308,
  0x0443, 0x0308, 0x0423, 0x030B, 0x0443, 0x030B, 0x0427, 0x0308, 0x0447, 0x0308, 0x042B, 0x0308,
  0x044B, 0x0308, 0x0627, 0x0653, 0x0627, 0x0654, 0x0648, 0x0654, 0x0627, 0x0655, 0x064A, 0x0654,
  0x06D5, 0x0654, 0x06C1, 0x0654, 0x06D2, 0x0654, 0x0928, 0x093C, 0x0930, 0x093C, 0x0933, 0x093C,
  0x0915, 0x093C, 0x0916, 0x093C, 0x0917, 0x093C, 0x091C, 0x093C, 0x0921, 0x093C, 0x0922, 0x093C,
  0x092B, 0x093C, 0x092F, 0x093C, 0x09C7, 0x09BE, 0x09C7, 0x09D7, 0x09A1, 0x09BC, 0x09A2, 0x09BC,
  0x09AF, 0x09BC, 0x0A32, 0x0A3C, 0x0A38, 0x0A3C, 0x0A16, 0x0A3C, 0x0A17, 0x0A3C, 0x0A1C, 0x0A3C,
  0x0A2B, 0x0A3C, 0x0B47, 0x0B56, 0x0B47, 0x0B3E, 0x0B47, 0x0B57, 0x0B21, 0x0B3C, 0x0B22, 0x0B3C,
  0x0B92, 0x0BD7, 0x0BC6, 0x0BBE, 0x0BC7, 0x0BBE, 0x0BC6, 0x0BD7, 0x0C46, 0x0C56, 0x0CBF, 0x0CD5,
  0x0CC6, 0x0CD5, 0x0CC6, 0x0CD6, 0x0CC6, 0x0CC2, 0x0CC6, 0x0CC2, 0x0CD5, 0x0D46, 0x0D3E, 0x0D47,
  0x0D3E, 0x0D46, 0x0D57, 0x0DD9, 0x0DCA, 0x0DD9, 0x0DCF, 0x0DD9, 0x0DCF, 0x0DCA, 0x0DD9, 0x0DDF,
  0x0F42, 0x0FB7, 0x0F4C, 0x0FB7, 0x0F51, 0x0FB7, 0x0F56, 0x0FB7, 0x0F5B, 0x0FB7, 0x0F40, 0x0FB5,
  0x0F71, 0x0F72, 0x0F71, 0x0F74, 0x0FB2, 0x0F80, 0x0FB3, 0x0F80, 0x0F71, 0x0F80, 0x0F92, 0x0FB7,
  0x0F9C, 0x0FB7, 0x0FA1, 0x0FB7, 0x0FA6, 0x0FB7, 0x0FAB, 0x0FB7, 0x0F90, 0x0FB5, 0x1025, 0x102E,
  0x1B05, 0x1B35, 0x1B07, 0x1B35, 0x1B09, 0x1B35, 0x1B0B, 0x1B35, 0x1B0D, 0x1B35, 0x1B11, 0x1B35,
  0x1B3A, 0x1B35, 0x1B3C, 0x1B35, 0x1B3E, 0x1B35, 0x1B3F, 0x1B35, 0x1B42, 0x1B35, 0x0041, 0x0325,
  0x0061, 0x0325, 0x0042, 0x0307, 0x0062, 0x0307, 0x0042, 0x0323, 0x0062, 0x0323, 0x0042, 0x0331,
  0x0062, 0x0331, 0x0043, 0x0327, 0x0301, 0x0063, 0x0327, 0x0301, 0x0044, 0x0307, 0x0064, 0x0307,
  0x0044, 0x0323, 0x0064, 0x0323, 0x0044, 0x0331, 0x0064, 0x0331, 0x0044, 0x0327, 0x0064, 0x0327,
  0x0044, 0x032D, 0x0064, 0x032D, 0x0045, 0x0304, 0x0300, 0x0065, 0x0304, 0x0300, 0x0045, 0x0304,
  0x0301, 0x0065, 0x0304, 0x0301, 0x0045, 0x032D, 0x0065, 0x032D, 0x0045, 0x0330, 0x0065, 0x0330,
  0x0045, 0x0327, 0x0306, 0x0065, 0x0327, 0x0306, 0x0046, 0x0307, 0x0066, 0x0307, 0x0047, 0x0304,
  0x0067, 0x0304, 0x0048, 0x0307, 0x0068, 0x0307, 0x0048, 0x0323, 0x0068, 0x0323, 0x0048, 0x0308,
  0x0068, 0x0308, 0x0048, 0x0327, 0x0068, 0x0327, 0x0048, 0x032E, 0x0068, 0x032E, 0x0049, 0x0330,
  0x0069, 0x0330, 0x0049, 0x0308, 0x0301, 0x0069, 0x0308, 0x0301, 0x004B, 0x0301, 0x006B, 0x0301,
  0x004B, 0x0323, 0x006B, 0x0323, 0x004B, 0x0331, 0x006B, 0x0331, 0x004C, 0x0323, 0x006C, 0x0323,
  0x004C, 0x0323, 0x0304, 0x006C, 0x0323, 0x0304, 0x004C, 0x0331, 0x006C, 0x0331, 0x004C, 0x032D,
  0x006C, 0x032D, 0x004D, 0x0301, 0x006D, 0x0301, 0x004D, 0x0307, 0x006D, 0x0307, 0x004D, 0x0323,
  0x006D, 0x0323, 0x004E, 0x0307, 0x006E, 0x0307, 0x004E, 0x0323, 0x006E, 0x0323, 0x004E, 0x0331,
  0x006E, 0x0331, 0x004E, 0x032D, 0x006E, 0x032D, 0x004F, 0x0303, 0x0301, 0x006F, 0x0303, 0x0301,
  0x004F, 0x0303, 0x0308, 0x006F, 0x0303, 0x0308, 0x004F, 0x0304, 0x0300, 0x006F, 0x0304, 0x0300,
  0x004F, 0x0304, 0x0301, 0x006F, 0x0304, 0x0301, 0x0050, 0x0301, 0x0070, 0x0301, 0x0050, 0x0307,
  0x0070, 0x0307, 0x0052, 0x0307, 0x0072, 0x0307, 0x0052, 0x0323, 0x0072, 0x0323, 0x0052, 0x0323,
  0x0304, 0x0072, 0x0323, 0x0304, 0x0052, 0x0331, 0x0072, 0x0331, 0x0053, 0x0307, 0x0073, 0x0307,
  0x0053, 0x0323, 0x0073, 0x0323, 0x0053, 0x0301, 0x0307, 0x0073, 0x0301, 0x0307, 0x0053, 0x030C,
  0x0307, 0x0073, 0x030C, 0x0307, 0x0053, 0x0323, 0x0307, 0x0073, 0x0323, 0x0307, 0x0054, 0x0307,
  0x0074, 0x0307, 0x0054, 0x0323, 0x0074, 0x0323, 0x0054, 0x0331, 0x0074, 0x0331, 0x0054, 0x032D,
  0x0074, 0x032D, 0x0055, 0x0324, 0x0075, 0x0324, 0x0055, 0x0330, 0x0075, 0x0330, 0x0055, 0x032D,
  0x0075, 0x032D, 0x0055, 0x0303, 0x0301, 0x0075, 0x0303, 0x0301, 0x0055, 0x0304, 0x0308, 0x0075,
  0x0304, 0x0308, 0x0056, 0x0303, 0x0076, 0x0303, 0x0056, 0x0323, 0x0076, 0x0323, 0x0057, 0x0300,
  0x0077, 0x0300, 0x0057, 0x0301, 0x0077, 0x0301, 0x0057, 0x0308, 0x0077, 0x0308, 0x0057, 0x0307,
  0x0077, 0x0307, 0x0057, 0x0323, 0x0077, 0x0323, 0x0058, 0x0307, 0x0078, 0x0307, 0x0058, 0x0308,
  0x0078, 0x0308, 0x0059, 0x0307, 0x0079, 0x0307, 0x005A, 0x0302, 0x007A, 0x0302, 0x005A, 0x0323,
  0x007A, 0x0323, 0x005A, 0x0331, 0x007A, 0x0331, 0x0068, 0x0331, 0x0074, 0x0308, 0x0077, 0x030A,
  0x0079, 0x030A, 0x017F, 0x0307, 0x0041, 0x0323, 0x0061, 0x0323, 0x0041, 0x0309, 0x0061, 0x0309,
  0x0041, 0x0302, 0x0301, 0x0061, 0x0302, 0x0301, 0x0041, 0x0302, 0x0300, 0x0061, 0x0302, 0x0300,
  0x0041, 0x0302, 0x0309, 0x0061, 0x0302, 0x0309, 0x0041, 0x0302, 0x0303, 0x0061, 0x0302, 0x0303,
  0x0041, 0x0323, 0x0302, 0x0061, 0x0323, 0x0302, 0x0041, 0x0306, 0x0301, 0x0061, 0x0306, 0x0301,
  0x0041, 0x0306, 0x0300, 0x0061, 0x0306, 0x0300, 0x0041, 0x0306, 0x0309, 0x0061, 0x0306, 0x0309,
  0x0041, 0x0306, 0x0303, 0x0061, 0x0306, 0x0303, 0x0041, 0x0323, 0x0306, 0x0061, 0x0323, 0x0306,
  0x0045, 0x0323, 0x0065, 0x0323, 0x0045, 0x0309, 0x0065, 0x0309, 0x0045, 0x0303, 0x0065, 0x0303,
  0x0045, 0x0302, 0x0301, 0x0065, 0x0302, 0x0301, 0x0045, 0x0302, 0x0300, 0x0065, 0x0302, 0x0300,
  0x0045, 0x0302, 0x0309, 0x0065, 0x0302, 0x0309, 0x0045, 0x0302, 0x0303, 0x0065, 0x0302, 0x0303,
  0x0045, 0x0323, 0x0302, 0x0065, 0x0323, 0x0302, 0x0049, 0x0309, 0x0069, 0x0309, 0x0049, 0x0323,
  0x0069, 0x0323, 0x004F, 0x0323, 0x006F, 0x0323, 0x004F, 0x0309, 0x006F, 0x0309, 0x004F, 0x0302,
  0x0301, 0x006F, 0x0302, 0x0301, 0x004F, 0x0302, 0x0300, 0x006F, 0x0302, 0x0300, 0x004F, 0x0302,
  0x0309, 0x006F, 0x0302, 0x0309, 0x004F, 0x0302, 0x0303, 0x006F, 0x0302, 0x0303, 0x004F, 0x0323,
  0x0302, 0x006F, 0x0323, 0x0302, 0x004F, 0x031B, 0x0301, 0x006F, 0x031B, 0x0301, 0x004F, 0x031B,
  0x0300, 0x006F, 0x031B, 0x0300, 0x004F, 0x031B, 0x0309, 0x006F, 0x031B, 0x0309, 0x004F, 0x031B,
  0x0303, 0x006F, 0x031B, 0x0303, 0x004F, 0x031B, 0x0323, 0x006F, 0x031B, 0x0323, 0x0055, 0x0323,
  0x0075, 0x0323, 0x0055, 0x0309, 0x0075, 0x0309, 0x0055, 0x031B, 0x0301, 0x0075, 0x031B, 0x0301,
  0x0055, 0x031B, 0x0300, 0x0075, 0x031B, 0x0300, 0x0055, 0x031B, 0x0309, 0x0075, 0x031B, 0x0309,
  0x0055, 0x031B, 0x0303, 0x0075, 0x031B, 0x0303, 0x0055, 0x031B, 0x0323, 0x0075, 0x031B, 0x0323,
  0x0059, 0x0300, 0x0079, 0x0300, 0x0059, 0x0323, 0x0079, 0x0323, 0x0059, 0x0309, 0x0079, 0x0309,
  0x0059, 0x0303, 0x0079, 0x0303, 0x03B1, 0x0313, 0x03B1, 0x0314, 0x03B1, 0x0313, 0x0300, 0x03B1,
  0x0314, 0x0300, 0x03B1, 0x0313, 0x0301, 0x03B1, 0x0314, 0x0301, 0x03B1, 0x0313, 0x0342, 0x03B1,
  0x0314, 0x0342, 0x0391, 0x0313, 0x0391, 0x0314, 0x0391, 0x0313, 0x0300, 0x0391, 0x0314, 0x0300,
  0x0391, 0x0313, 0x0301, 0x0391, 0x0314, 0x0301, 0x0391, 0x0313, 0x0342, 0x0391, 0x0314, 0x0342,
  0x03B5, 0x0313, 0x03B5, 0x0314, 0x03B5, 0x0313, 0x0300, 0x03B5, 0x0314, 0x0300, 0x03B5, 0x0313,
  0x0301, 0x03B5, 0x0314, 0x0301, 0x0395, 0x0313, 0x0395, 0x0314, 0x0395, 0x0313, 0x0300, 0x0395,
  0x0314, 0x0300, 0x0395, 0x0313, 0x0301, 0x0395, 0x0314, 0x0301, 0x03B7, 0x0313, 0x03B7, 0x0314,
  0x03B7, 0x0313, 0x0300, 0x03B7, 0x0314, 0x0300, 0x03B7, 0x0313, 0x0301, 0x03B7, 0x0314, 0x0301,
  0x03B7, 0x0313, 0x0342, 0x03B7, 0x0314, 0x0342, 0x0397, 0x0313, 0x0397, 0x0314, 0x0397, 0x0313,
  0x0300, 0x0397, 0x0314, 0x0300, 0x0397, 0x0313, 0x0301, 0x0397, 0x0314, 0x0301, 0x0397, 0x0313,
  0x0342, 0x0397, 0x0314, 0x0342, 0x03B9, 0x0313, 0x03B9, 0x0314, 0x03B9, 0x0313, 0x0300, 0x03B9,
  0x0314, 0x0300, 0x03B9, 0x0313, 0x0301, 0x03B9, 0x0314, 0x0301, 0x03B9, 0x0313, 0x0342, 0x03B9,
  0x0314, 0x0342, 0x0399, 0x0313, 0x0399, 0x0314, 0x0399, 0x0313, 0x0300, 0x0399, 0x0314, 0x0300,
  0x0399, 0x0313, 0x0301, 0x0399, 0x0314, 0x0301, 0x0399, 0x0313, 0x0342, 0x0399, 0x0314, 0x0342,
  0x03BF, 0x0313, 0x03BF, 0x0314, 0x03BF, 0x0313, 0x0300, 0x03BF, 0x0314, 0x0300, 0x03BF, 0x0313,
  0x0301, 0x03BF, 0x0314, 0x0301, 0x039F, 0x0313, 0x039F, 0x0314, 0x039F, 0x0313, 0x0300, 0x039F,
  0x0314, 0x0300, 0x039F, 0x0313, 0x0301, 0x039F, 0x0314, 0x0301, 0x03C5, 0x0313, 0x03C5, 0x0314,
  0x03C5, 0x0313, 0x0300, 0x03C5, 0x0314, 0x0300, 0x03C5, 0x0313, 0x0301, 0x03C5, 0x0314, 0x0301,
  0x03C5, 0x0313, 0x0342, 0x03C5, 0x0314, 0x0342, 0x03A5, 0x0314, 0x03A5, 0x0314, 0x0300, 0x03A5,
  0x0314, 0x0301, 0x03A5, 0x0314, 0x0342, 0x03C9, 0x0313, 0x03C9, 0x0314, 0x03C9, 0x0313, 0x0300,
  0x03C9, 0x0314, 0x0300, 0x03C9, 0x0313, 0x0301, 0x03C9, 0x0314, 0x0301, 0x03C9, 0x0313, 0x0342,
  0x03C9, 0x0314, 0x0342, 0x03A9, 0x0313, 0x03A9, 0x0314, 0x03A9, 0x0313, 0x0300, 0x03A9, 0x0314,
  0x0300, 0x03A9, 0x0313, 0x0301, 0x03A9, 0x0314, 0x0301, 0x03A9, 0x0313, 0x0342, 0x03A9, 0x0314,
  0x0342, 0x03B1, 0x0300, 0x03B1, 0x0301, 0x03B5, 0x0300, 0x03B5, 0x0301, 0x03B7, 0x0300, 0x03B7,
  0x0301, 0x03B9, 0x0300, 0x03B9, 0x0301, 0x03BF, 0x0300, 0x03BF, 0x0301, 0x03C5, 0x0300, 0x03C5,
  0x0301, 0x03C9, 0x0300, 0x03C9, 0x0301, 0x03B1, 0x0313, 0x0345, 0x03B1, 0x0314, 0x0345, 0x03B1,
  0x0313, 0x0300, 0x0345, 0x03B1, 0x0314, 0x0300, 0x0345, 0x03B1, 0x0313, 0x0301, 0x0345, 0x03B1,
  0x0314, 0x0301, 0x0345, 0x03B1, 0x0313, 0x0342, 0x0345, 0x03B1, 0x0314, 0x0342, 0x0345, 0x0391,
  0x0313, 0x0345, 0x0391, 0x0314, 0x0345, 0x0391, 0x0313, 0x0300, 0x0345, 0x0391, 0x0314, 0x0300,
  0x0345, 0x0391, 0x0313, 0x0301, 0x0345, 0x0391, 0x0314, 0x0301, 0x0345, 0x0391, 0x0313, 0x0342,
  0x0345, 0x0391, 0x0314, 0x0342, 0x0345, 0x03B7, 0x0313, 0x0345, 0x03B7, 0x0314, 0x0345, 0x03B7,
  0x0313, 0x0300, 0x0345, 0x03B7, 0x0314, 0x0300, 0x0345, 0x03B7, 0x0313, 0x0301, 0x0345, 0x03B7,
  0x0314, 0x0301, 0x0345, 0x03B7, 0x0313, 0x0342, 0x0345, 0x03B7, 0x0314, 0x0342, 0x0345, 0x0397,
  0x0313, 0x0345, 0x0397, 0x0314, 0x0345, 0x0397, 0x0313, 0x0300, 0x0345, 0x0397, 0x0314, 0x0300,
  0x0345, 0x0397, 0x0313, 0x0301, 0x0345, 0x0397, 0x0314, 0x0301, 0x0345, 0x0397, 0x0313, 0x0342,
  0x0345, 0x0397, 0x0314, 0x0342, 0x0345, 0x03C9, 0x0313, 0x0345, 0x03C9, 0x0314, 0x0345, 0x03C9,
  0x0313, 0x0300, 0x0345, 0x03C9, 0x0314, 0x0300, 0x0345, 0x03C9, 0x0313, 0x0301, 0x0345, 0x03C9,
  0x0314, 0x0301, 0x0345, 0x03C9, 0x0313, 0x0342, 0x0345, 0x03C9, 0x0314, 0x0342, 0x0345, 0x03A9,
  0x0313, 0x0345, 0x03A9, 0x0314, 0x0345, 0x03A9, 0x0313, 0x0300, 0x0345, 0x03A9, 0x0314, 0x0300,
  0x0345, 0x03A9, 0x0313, 0x0301, 0x0345, 0x03A9, 0x0314, 0x0301, 0x0345, 0x03A9, 0x0313, 0x0342,
  0x0345, 0x03A9, 0x0314, 0x0342, 0x0345, 0x03B1, 0x0306, 0x03B1, 0x0304, 0x03B1, 0x0300, 0x0345,
  0x03B1, 0x0345, 0x03B1, 0x0301, 0x0345, 0x03B1, 0x0342, 0x03B1, 0x0342, 0x0345, 0x0391, 0x0306,
  0x0391, 0x0304, 0x0391, 0x0300, 0x0391, 0x0301, 0x0391, 0x0345, 0x03B9, 0x00A8, 0x0342, 0x03B7,
  0x0300, 0x0345, 0x03B7, 0x0345, 0x03B7, 0x0301, 0x0345, 0x03B7, 0x0342, 0x03B7, 0x0342, 0x0345,
  0x0395, 0x0300, 0x0395, 0x0301, 0x0397, 0x0300, 0x0397, 0x0301, 0x0397, 0x0345, 0x1FBF, 0x0300,
  0x1FBF, 0x0301, 0x1FBF, 0x0342, 0x03B9, 0x0306, 0x03B9, 0x0304, 0x03B9, 0x0308, 0x0300, 0x03B9,
  0x0308, 0x0301, 0x03B9, 0x0342, 0x03B9, 0x0308, 0x0342, 0x0399, 0x0306, 0x0399, 0x0304, 0x0399,
  0x0300, 0x0399, 0x0301, 0x1FFE, 0x0300, 0x1FFE, 0x0301, 0x1FFE, 0x0342, 0x03C5, 0x0306, 0x03C5,
  0x0304, 0x03C5, 0x0308, 0x0300, 0x03C5, 0x0308, 0x0301, 0x03C1, 0x0313, 0x03C1, 0x0314, 0x03C5,
  0x0342, 0x03C5, 0x0308, 0x0342, 0x03A5, 0x0306, 0x03A5, 0x0304, 0x03A5, 0x0300, 0x03A5, 0x0301,
  0x03A1, 0x0314, 0x00A8, 0x0300, 0x00A8, 0x0301, 0x0060, 0x03C9, 0x0300, 0x0345, 0x03C9, 0x0345,
  0x03C9, 0x0301, 0x0345, 0x03C9, 0x0342, 0x03C9, 0x0342, 0x0345, 0x039F, 0x0300, 0x039F, 0x0301,
  0x03A9, 0x0300, 0x03A9, 0x0301, 0x03A9, 0x0345, 0x00B4, 0x2002, 0x2003, 0x03A9, 0x004B, 0x0041,
  0x030A, 0x2190, 0x0338, 0x2192, 0x0338, 0x2194, 0x0338, 0x21D0, 0x0338, 0x21D4, 0x0338, 0x21D2,
  0x0338, 0x2203, 0x0338, 0x2208, 0x0338, 0x220B, 0x0338, 0x2223, 0x0338, 0x2225, 0x0338, 0x223C,
  0x0338, 0x2243, 0x0338, 0x2245, 0x0338, 0x2248, 0x0338, 0x003D, 0x0338, 0x2261, 0x0338, 0x224D,
  0x0338, 0x003C, 0x0338, 0x003E, 0x0338, 0x2264, 0x0338, 0x2265, 0x0338, 0x2272, 0x0338, 0x2273,
  0x0338, 0x2276, 0x0338, 0x2277, 0x0338, 0x227A, 0x0338, 0x227B, 0x0338, 0x2282, 0x0338, 0x2283,
  0x0338, 0x2286, 0x0338, 0x2287, 0x0338, 0x22A2, 0x0338, 0x22A8, 0x0338, 0x22A9, 0x0338, 0x22AB,
  0x0338, 0x227C, 0x0338, 0x227D, 0x0338, 0x2291, 0x0338, 0x2292, 0x0338, 0x22B2, 0x0338, 0x22B3,
  0x0338, 0x22B4, 0x0338, 0x22B5, 0x0338, 0x3008, 0x3009, 0x2ADD, 0x0338, 0x304B, 0x3099, 0x304D,
  0x3099, 0x304F, 0x3099, 0x3051, 0x3099, 0x3053, 0x3099, 0x3055, 0x3099, 0x3057, 0x3099, 0x3059,
  0x3099, 0x305B, 0x3099, 0x305D, 0x3099, 0x305F, 0x3099, 0x3061, 0x3099, 0x3064, 0x3099, 0x3066,
  0x3099, 0x3068, 0x3099, 0x306F, 0x3099, 0x306F, 0x309A, 0x3072, 0x3099, 0x3072, 0x309A, 0x3075,
  0x3099, 0x3075, 0x309A, 0x3078, 0x3099, 0x3078, 0x309A, 0x307B, 0x3099, 0x307B, 0x309A, 0x3046,
  0x3099, 0x309D, 0x3099, 0x30AB, 0x3099, 0x30AD, 0x3099, 0x30AF, 0x3099, 0x30B1, 0x3099, 0x30B3,
  0x3099, 0x30B5, 0x3099, 0x30B7, 0x3099, 0x30B9, 0x3099, 0x30BB, 0x3099, 0x30BD, 0x3099, 0x30BF,
  0x3099, 0x30C1, 0x3099, 0x30C4, 0x3099, 0x30C6, 0x3099, 0x30C8, 0x3099, 0x30CF, 0x3099, 0x30CF,
  0x309A, 0x30D2, 0x3099, 0x30D2, 0x309A, 0x30D5, 0x3099, 0x30D5, 0x309A, 0x30D8, 0x3099, 0x30D8,
  0x309A, 0x30DB, 0x3099, 0x30DB, 0x309A, 0x30A6, 0x3099, 0x30EF, 0x3099, 0x30F0, 0x3099, 0x30F1,
  0x3099, 0x30F2, 0x3099, 0x30FD, 0x3099, 0x8C48, 0x66F4, 0x8ECA, 0x8CC8, 0x6ED1, 0x4E32, 0x53E5,
  0x9F9C, 0x9F9C, 0x5951, 0x91D1, 0x5587, 0x5948, 0x61F6, 0x7669, 0x7F85, 0x863F, 0x87BA, 0x88F8,
  0x908F, 0x6A02, 0x6D1B, 0x70D9, 0x73DE, 0x843D, 0x916A, 0x99F1, 0x4E82, 0x5375, 0x6B04, 0x721B,
  0x862D, 0x9E1E, 0x5D50, 0x6FEB, 0x85CD, 0x8964, 0x62C9, 0x81D8, 0x881F, 0x5ECA, 0x6717, 0x6D6A,
  0x72FC, 0x90CE, 0x4F86, 0x51B7, 0x52DE, 0x64C4, 0x6AD3, 0x7210, 0x76E7, 0x8001, 0x8606, 0x865C,
  0x8DEF, 0x9732, 0x9B6F, 0x9DFA, 0x788C, 0x797F, 0x7DA0, 0x83C9, 0x9304, 0x9E7F, 0x8AD6, 0x58DF,
  0x5F04, 0x7C60, 0x807E, 0x7262, 0x78CA, 0x8CC2, 0x96F7, 0x58D8, 0x5C62, 0x6A13, 0x6DDA, 0x6F0F,
  0x7D2F, 0x7E37, 0x964B, 0x52D2, 0x808B, 0x51DC, 0x51CC, 0x7A1C, 0x7DBE, 0x83F1, 0x9675, 0x8B80,
  0x62CF, 0x6A02, 0x8AFE, 0x4E39, 0x5BE7, 0x6012, 0x7387, 0x7570, 0x5317, 0x78FB, 0x4FBF, 0x5FA9,
  0x4E0D, 0x6CCC, 0x6578, 0x7D22, 0x53C3, 0x585E, 0x7701, 0x8449, 0x8AAA, 0x6BBA, 0x8FB0, 0x6C88,
  0x62FE, 0x82E5, 0x63A0, 0x7565, 0x4EAE, 0x5169, 0x51C9, 0x6881, 0x7CE7, 0x826F, 0x8AD2, 0x91CF,
  0x52F5, 0x5442, 0x5973, 0x5EEC, 0x65C5, 0x6FFE, 0x792A, 0x95AD, 0x9A6A, 0x9E97, 0x9ECE, 0x529B,
  0x66C6, 0x6B77, 0x8F62, 0x5E74, 0x6190, 0x6200, 0x649A, 0x6F23, 0x7149, 0x7489, 0x79CA, 0x7DF4,
  0x806F, 0x8F26, 0x84EE, 0x9023, 0x934A, 0x5217, 0x52A3, 0x54BD, 0x70C8, 0x88C2, 0x8AAA, 0x5EC9,
  0x5FF5, 0x637B, 0x6BAE, 0x7C3E, 0x7375, 0x4EE4, 0x56F9, 0x5BE7, 0x5DBA, 0x601C, 0x73B2, 0x7469,
  0x7F9A, 0x8046, 0x9234, 0x96F6, 0x9748, 0x9818, 0x4F8B, 0x79AE, 0x91B4, 0x96B8, 0x60E1, 0x4E86,
  0x50DA, 0x5BEE, 0x5C3F, 0x6599, 0x6A02, 0x71CE, 0x7642, 0x84FC, 0x907C, 0x9F8D, 0x6688, 0x962E,
  0x5289, 0x677B, 0x67F3, 0x6D41, 0x6E9C, 0x7409, 0x7559, 0x786B, 0x7D10, 0x985E, 0x516D, 0x622E,
  0x9678, 0x502B, 0x5D19, 0x6DEA, 0x8F2A, 0x5F8B, 0x6144, 0x6817, 0x7387, 0x9686, 0x5229, 0x540F,
  0x5C65, 0x6613, 0x674E, 0x68A8, 0x6CE5, 0x7406, 0x75E2, 0x7F79, 0x88CF, 0x88E1, 0x91CC, 0x96E2,
  0x533F, 0x6EBA, 0x541D, 0x71D0, 0x7498, 0x85FA, 0x96A3, 0x9C57, 0x9E9F, 0x6797, 0x6DCB, 0x81E8,
  0x7ACB, 0x7B20, 0x7C92, 0x72C0, 0x7099, 0x8B58, 0x4EC0, 0x8336, 0x523A, 0x5207, 0x5EA6, 0x62D3,
  0x7CD6, 0x5B85, 0x6D1E, 0x66B4, 0x8F3B, 0x884C, 0x964D, 0x898B, 0x5ED3, 0x5140, 0x55C0, 0x585A,
  0x6674, 0x51DE, 0x732A, 0x76CA, 0x793C, 0x795E, 0x7965, 0x798F, 0x9756, 0x7CBE, 0x7FBD, 0x8612,
  0x8AF8, 0x9038, 0x90FD, 0x98EF, 0x98FC, 0x9928, 0x9DB4, 0x90DE, 0x96B7, 0x4FAE, 0x50E7, 0x514D,
  0x52C9, 0x52E4, 0x5351, 0x559D, 0x5606, 0x5668, 0x5840, 0x58A8, 0x5C64, 0x5C6E, 0x6094, 0x6168,
  0x618E, 0x61F2, 0x654F, 0x65E2, 0x6691, 0x6885, 0x6D77, 0x6E1A, 0x6F22, 0x716E, 0x722B, 0x7422,
  0x7891, 0x793E, 0x7949, 0x7948, 0x7950, 0x7956, 0x795D, 0x798D, 0x798E, 0x7A40, 0x7A81, 0x7BC0,
  0x7DF4, 0x7E09, 0x7E41, 0x7F72, 0x8005, 0x81ED, 0x8279, 0x8279, 0x8457, 0x8910, 0x8996, 0x8B01,
  0x8B39, 0x8CD3, 0x8D08, 0x8FB6, 0x9038, 0x96E3, 0x97FF, 0x983B, 0x6075, 0x242EE, 0x8218, 0x4E26,
  0x51B5, 0x5168, 0x4F80, 0x5145, 0x5180, 0x52C7, 0x52FA, 0x559D, 0x5555, 0x5599, 0x55E2, 0x585A,
  0x58B3, 0x5944, 0x5954, 0x5A62, 0x5B28, 0x5ED2, 0x5ED9, 0x5F69, 0x5FAD, 0x60D8, 0x614E, 0x6108,
  0x618E, 0x6160, 0x61F2, 0x6234, 0x63C4, 0x641C, 0x6452, 0x6556, 0x6674, 0x6717, 0x671B, 0x6756,
  0x6B79, 0x6BBA, 0x6D41, 0x6EDB, 0x6ECB, 0x6F22, 0x701E, 0x716E, 0x77A7, 0x7235, 0x72AF, 0x732A,
  0x7471, 0x7506, 0x753B, 0x761D, 0x761F, 0x76CA, 0x76DB, 0x76F4, 0x774A, 0x7740, 0x78CC, 0x7AB1,
  0x7BC0, 0x7C7B, 0x7D5B, 0x7DF4, 0x7F3E, 0x8005, 0x8352, 0x83EF, 0x8779, 0x8941, 0x8986, 0x8996,
  0x8ABF, 0x8AF8, 0x8ACB, 0x8B01, 0x8AFE, 0x8AED, 0x8B39, 0x8B8A, 0x8D08, 0x8F38, 0x9072, 0x9199,
  0x9276, 0x967C, 0x96E3, 0x9756, 0x97DB, 0x97FF, 0x980B, 0x983B, 0x9B12, 0x9F9C, 0x2284A, 0x22844,
  0x233D5, 0x3B9D, 0x4018, 0x4039, 0x25249, 0x25CD0, 0x27ED3, 0x9F43, 0x9F8E, 0x05D9, 0x05B4, 0x05F2,
  0x05B7, 0x05E9, 0x05C1, 0x05E9, 0x05C2, 0x05E9, 0x05BC, 0x05C1, 0x05E9, 0x05BC, 0x05C2, 0x05D0,
  0x05B7, 0x05D0, 0x05B8, 0x05D0, 0x05BC, 0x05D1, 0x05BC, 0x05D2, 0x05BC, 0x05D3, 0x05BC, 0x05D4,
  0x05BC, 0x05D5, 0x05BC, 0x05D6, 0x05BC, 0x05D8, 0x05BC, 0x05D9, 0x05BC, 0x05DA, 0x05BC, 0x05DB,
  0x05BC, 0x05DC, 0x05BC, 0x05DE, 0x05BC, 0x05E0, 0x05BC, 0x05E1, 0x05BC, 0x05E3, 0x05BC, 0x05E4,
  0x05BC, 0x05E6, 0x05BC, 0x05E7, 0x05BC, 0x05E8, 0x05BC, 0x05E9, 0x05BC, 0x05EA, 0x05BC, 0x05D5,
  0x05B9, 0x05D1, 0x05BF, 0x05DB, 0x05BF, 0x05E4, 0x05BF, 0x11099, 0x110BA, 0x1109B, 0x110BA, 0x110A5,
  0x110BA, 0x11131, 0x11127, 0x11132, 0x11127, 0x11347, 0x1133E, 0x11347, 0x11357, 0x114B9, 0x114BA, 0x114B9,
  0x114B0, 0x114B9, 0x114BD, 0x115B8, 0x115AF, 0x115B9, 0x115AF, 0x11935, 0x11930, 0x1D157, 0x1D165, 0x1D158,
  0x1D165, 0x1D158, 0x1D165, 0x1D16E, 0x1D158, 0x1D165, 0x1D16F, 0x1D158, 0x1D165, 0x1D170, 0x1D158, 0x1D165,
  0x1D171, 0x1D158, 0x1D165, 0x1D172, 0x1D1B9, 0x1D165, 0x1D1BA, 0x1D165, 0x1D1B9, 0x1D165, 0x1D16E, 0x1D1BA,
  0x1D165, 0x1D16E, 0x1D1B9, 0x1D165, 0x1D16F, 0x1D1BA, 0x1D165, 0x1D16F, 0x4E3D, 0x4E38, 0x4E41, 0x20122,
  0x4F60, 0x4FAE, 0x4FBB, 0x5002, 0x507A, 0x5099, 0x50E7, 0x50CF, 0x349E, 0x2063A, 0x514D, 0x5154,
  0x5164, 0x5177, 0x2051C, 0x34B9, 0x5167, 0x518D, 0x2054B, 0x5197, 0x51A4, 0x4ECC, 0x51AC, 0x51B5,
  0x291DF, 0x51F5, 0x5203, 0x34DF, 0x523B, 0x5246, 0x5272, 0x5277, 0x3515, 0x52C7, 0x52C9, 0x52E4,
  0x52FA, 0x5305, 0x5306, 0x5317, 0x5349, 0x5351, 0x535A, 0x5373, 0x537D, 0x537F, 0x537F, 0x537F,
  0x20A2C, 0x7070, 0x53CA, 0x53DF, 0x20B63, 0x53EB, 0x53F1, 0x5406, 0x549E, 0x5438, 0x5448, 0x5468,
  0x54A2, 0x54F6, 0x5510, 0x5553, 0x5563, 0x5584, 0x5584, 0x5599, 0x55AB, 0x55B3, 0x55C2, 0x5716,
  0x5606, 0x5717, 0x5651, 0x5674, 0x5207, 0x58EE, 0x57CE, 0x57F4, 0x580D, 0x578B, 0x5832, 0x5831,
  0x58AC, 0x214E4, 0x58F2, 0x58F7, 0x5906, 0x591A, 0x5922, 0x5962, 0x216A8, 0x216EA, 0x59EC, 0x5A1B,
  0x5A27, 0x59D8, 0x5A66, 0x36EE, 0x36FC, 0x5B08, 0x5B3E, 0x5B3E, 0x219C8, 0x5BC3, 0x5BD8, 0x5BE7,
  0x5BF3, 0x21B18, 0x5BFF, 0x5C06, 0x5F53, 0x5C22, 0x3781, 0x5C60, 0x5C6E, 0x5CC0, 0x5C8D, 0x21DE4,
  0x5D43, 0x21DE6, 0x5D6E, 0x5D6B, 0x5D7C, 0x5DE1, 0x5DE2, 0x382F, 0x5DFD, 0x5E28, 0x5E3D, 0x5E69,
  0x3862, 0x22183, 0x387C, 0x5EB0, 0x5EB3, 0x5EB6, 0x5ECA, 0x2A392, 0x5EFE, 0x22331, 0x22331, 0x8201,
  0x5F22, 0x5F22, 0x38C7, 0x232B8, 0x261DA, 0x5F62, 0x5F6B, 0x38E3, 0x5F9A, 0x5FCD, 0x5FD7, 0x5FF9,
  0x6081, 0x393A, 0x391C, 0x6094, 0x226D4, 0x60C7, 0x6148, 0x614C, 0x614E, 0x614C, 0x617A, 0x618E,
  0x61B2, 0x61A4, 0x61AF, 0x61DE, 0x61F2, 0x61F6, 0x6210, 0x621B, 0x625D, 0x62B1, 0x62D4, 0x6350,
  0x22B0C, 0x633D, 0x62FC, 0x6368, 0x6383, 0x63E4, 0x22BF1, 0x6422, 0x63C5, 0x63A9, 0x3A2E, 0x6469,
  0x647E, 0x649D, 0x6477, 0x3A6C, 0x654F, 0x656C, 0x2300A, 0x65E3, 0x66F8, 0x6649, 0x3B19, 0x6691,
  0x3B08, 0x3AE4, 0x5192, 0x5195, 0x6700, 0x669C, 0x80AD, 0x43D9, 0x6717, 0x671B, 0x6721, 0x675E,
  0x6753, 0x233C3, 0x3B49, 0x67FA, 0x6785, 0x6852, 0x6885, 0x2346D, 0x688E, 0x681F, 0x6914, 0x3B9D,
  0x6942, 0x69A3, 0x69EA, 0x6AA8, 0x236A3, 0x6ADB, 0x3C18, 0x6B21, 0x238A7, 0x6B54, 0x3C4E, 0x6B72,
  0x6B9F, 0x6BBA, 0x6BBB, 0x23A8D, 0x21D0B, 0x23AFA, 0x6C4E, 0x23CBC, 0x6CBF, 0x6CCD, 0x6C67, 0x6D16,
  0x6D3E, 0x6D77, 0x6D41, 0x6D69, 0x6D78, 0x6D85, 0x23D1E, 0x6D34, 0x6E2F, 0x6E6E, 0x3D33, 0x6ECB,
  0x6EC7, 0x23ED1, 0x6DF9, 0x6F6E, 0x23F5E, 0x23F8E, 0x6FC6, 0x7039, 0x701E, 0x701B, 0x3D96, 0x704A,
  0x707D, 0x7077, 0x70AD, 0x20525, 0x7145, 0x24263, 0x719C, 0x243AB, 0x7228, 0x7235, 0x7250, 0x24608,
  0x7280, 0x7295, 0x24735, 0x24814, 0x737A, 0x738B, 0x3EAC, 0x73A5, 0x3EB8, 0x3EB8, 0x7447, 0x745C,
  0x7471, 0x7485, 0x74CA, 0x3F1B, 0x7524, 0x24C36, 0x753E, 0x24C92, 0x7570, 0x2219F, 0x7610, 0x24FA1,
  0x24FB8, 0x25044, 0x3FFC, 0x4008, 0x76F4, 0x250F3, 0x250F2, 0x25119, 0x25133, 0x771E, 0x771F, 0x771F,
  0x774A, 0x4039, 0x778B, 0x4046, 0x4096, 0x2541D, 0x784E, 0x788C, 0x78CC, 0x40E3, 0x25626, 0x7956,
  0x2569A, 0x256C5, 0x798F, 0x79EB, 0x412F, 0x7A40, 0x7A4A, 0x7A4F, 0x2597C, 0x25AA7, 0x25AA7, 0x7AEE,
  0x4202, 0x25BAB, 0x7BC6, 0x7BC9, 0x4227, 0x25C80, 0x7CD2, 0x42A0, 0x7CE8, 0x7CE3, 0x7D00, 0x25F86,
  0x7D63, 0x4301, 0x7DC7, 0x7E02, 0x7E45, 0x4334, 0x26228, 0x26247, 0x4359, 0x262D9, 0x7F7A, 0x2633E,
  0x7F95, 0x7FFA, 0x8005, 0x264DA, 0x26523, 0x8060, 0x265A8, 0x8070, 0x2335F, 0x43D5, 0x80B2, 0x8103,
  0x440B, 0x813E, 0x5AB5, 0x267A7, 0x267B5, 0x23393, 0x2339C, 0x8201, 0x8204, 0x8F9E, 0x446B, 0x8291,
  0x828B, 0x829D, 0x52B3, 0x82B1, 0x82B3, 0x82BD, 0x82E6, 0x26B3C, 0x82E5, 0x831D, 0x8363, 0x83AD,
  0x8323, 0x83BD, 0x83E7, 0x8457, 0x8353, 0x83CA, 0x83CC, 0x83DC, 0x26C36, 0x26D6B, 0x26CD5, 0x452B,
  0x84F1, 0x84F3, 0x8516, 0x273CA, 0x8564, 0x26F2C, 0x455D, 0x4561, 0x26FB1, 0x270D2, 0x456B, 0x8650,
  0x865C, 0x8667, 0x8669, 0x86A9, 0x8688, 0x870E, 0x86E2, 0x8779, 0x8728, 0x876B, 0x8786, 0x45D7,
  0x87E1, 0x8801, 0x45F9, 0x8860, 0x8863, 0x27667, 0x88D7, 0x88DE, 0x4635, 0x88FA, 0x34BB, 0x278AE,
  0x27966, 0x46BE, 0x46C7, 0x8AA0, 0x8AED, 0x8B8A, 0x8C55, 0x27CA8, 0x8CAB, 0x8CC1, 0x8D1B, 0x8D77,
  0x27F2F, 0x20804, 0x8DCB, 0x8DBC, 0x8DF0, 0x208DE, 0x8ED4, 0x8F38, 0x285D2, 0x285ED, 0x9094, 0x90F1,
  0x9111, 0x2872E, 0x911B, 0x9238, 0x92D7, 0x92D8, 0x927C, 0x93F9, 0x9415, 0x28BFA, 0x958B, 0x4995,
  0x95B7, 0x28D77, 0x49E6, 0x96C3, 0x5DB2, 0x9723, 0x29145, 0x2921A, 0x4A6E, 0x4A76, 0x97E0, 0x2940A,
  0x4AB2, 0x29496, 0x980B, 0x980B, 0x9829, 0x295B6, 0x98E2, 0x4B33, 0x9929, 0x99A7, 0x99C2, 0x99FE,
  0x4BCE, 0x29B30, 0x9B12, 0x9C40, 0x9CFD, 0x4CCE, 0x4CED, 0x9D67, 0x2A0CE, 0x4CF8, 0x2A105, 0x2A20E,
  0x2A291, 0x9EBB, 0x4D56, 0x9EF9, 0x9EFE, 0x9F05, 0x9F0F, 0x9F16, 0x9F3B, 0x2A600,
};

const DecompositionEntry decomposition_entries[2061] = {
  {0x000C0, 0, 2},
  {0x000C1, 2, 2},
  {0x000C2, 4, 2},
  {0x000C3, 6, 2},
  {0x000C4, 8, 2},
  {0x000C5, 10, 2},
  {0x000C7, 12, 2},
  {0x000C8, 14, 2},
  {0x000C9, 16, 2},
  {0x000CA, 18, 2},
  {0x000CB, 20, 2},
  {0x000CC, 22, 2},
  {0x000CD, 24, 2},
  {0x000CE, 26, 2},
  {0x000CF, 28, 2},
  {0x000D1, 30, 2},
  {0x000D2, 32, 2},
  {0x000D3, 34, 2},
  {0x000D4, 36, 2},
  {0x000D5, 38, 2},
  {0x000D6, 40, 2},
  {0x000D9, 42, 2},
  {0x000DA, 44, 2},
  {0x000DB, 46, 2},
  {0x000DC, 48, 2},
  {0x000DD, 50, 2},
  {0x000E0, 52, 2},
  {0x000E1, 54, 2},
  {0x000E2, 56, 2},
  {0x000E3, 58, 2},
  {0x000E4, 60, 2},
  {0x000E5, 62, 2},
  {0x000E7, 64, 2},
  {0x000E8, 66, 2},
  {0x000E9, 68, 2},
  {0x000EA, 70, 2},
  {0x000EB, 72, 2},
  {0x000EC, 74, 2},
  {0x000ED, 76, 2},
  {0x000EE, 78, 2},
  {0x000EF, 80, 2},
  {0x000F1, 82, 2},
  {0x000F2, 84, 2},
  {0x000F3, 86, 2},
  {0x000F4, 88, 2},
  {0x000F5, 90, 2},
  {0x000F6, 92, 2},
  {0x000F9, 94, 2},
  {0x000FA, 96, 2},
  {0x000FB, 98, 2},
  {0x000FC, 100, 2},
  {0x000FD, 102, 2},
  {0x000FF, 104, 2},
  {0x00100, 106, 2},
  {0x00101, 108, 2},
  {0x00102, 110, 2},
  {0x00103, 112, 2},
  {0x00104, 114, 2},
  {0x00105, 116, 2},
  {0x00106, 118, 2},
  {0x00107, 120, 2},
  {0x00108, 122, 2},
  {0x00109, 124, 2},
  {0x0010A, 126, 2},
  {0x0010B, 128, 2},
  {0x0010C, 130, 2},
  {0x0010D, 132, 2},
  {0x0010E, 134, 2},
  {0x0010F, 136, 2},
  {0x00112, 138, 2},
  {0x00113, 140, 2},
  {0x00114, 142, 2},
  {0x00115, 144, 2},
  {0x00116, 146, 2},
  {0x00117, 148, 2},
  {0x00118, 150, 2},
  {0x00119, 152, 2},
  {0x0011A, 154, 2},
  {0x0011B, 156, 2},
  {0x0011C, 158, 2},
  {0x0011D, 160, 2},
  {0x0011E, 162, 2},
  {0x0011F, 164, 2},
  {0x00120, 166, 2},
  {0x00121, 168, 2},
  {0x00122, 170, 2},
  {0x00123, 172, 2},
  {0x00124, 174, 2},
  {0x00125, 176, 2},
  {0x00128, 178, 2},
  {0x00129, 180, 2},
  {0x0012A, 182, 2},
  {0x0012B, 184, 2},
  {0x0012C, 186, 2},
  {0x0012D, 188, 2},
  {0x0012E, 190, 2},
  {0x0012F, 192, 2},
  {0x00130, 194, 2},
  {0x00134, 196, 2},
  {0x00135, 198, 2},
  {0x00136, 200, 2},
  {0x00137, 202, 2},
  {0x00139, 204, 2},
  {0x0013A, 206, 2},
  {0x0013B, 208, 2},
  {0x0013C, 210, 2},
  {0x0013D, 212, 2},
  {0x0013E, 214, 2},
  {0x00143, 216, 2},
  {0x00144, 218, 2},
  {0x00145, 220, 2},
  {0x00146, 222, 2},
  {0x00147, 224, 2},
  {0x00148, 226, 2},
  {0x0014C, 228, 2},
  {0x0014D, 230, 2},
  {0x0014E, 232, 2},
  {0x0014F, 234, 2},
  {0x00150, 236, 2},
  {0x00151, 238, 2},
  {0x00154, 240, 2},
  {0x00155, 242, 2},
  {0x00156, 244, 2},
  {0x00157, 246, 2},
  {0x00158, 248, 2},
  {0x00159, 250, 2},
  {0x0015A, 252, 2},
  {0x0015B, 254, 2},
  {0x0015C, 256, 2},
  {0x0015D, 258, 2},
  {0x0015E, 260, 2},
  {0x0015F, 262, 2},
  {0x00160, 264, 2},
  {0x00161, 266, 2},
  {0x00162, 268, 2},
  {0x00163, 270, 2},
  {0x00164, 272, 2},
  {0x00165, 274, 2},
  {0x00168, 276, 2},
  {0x00169, 278, 2},
  {0x0016A, 280, 2},
  {0x0016B, 282, 2},
  {0x0016C, 284, 2},
  {0x0016D, 286, 2},
  {0x0016E, 288, 2},
  {0x0016F, 290, 2},
  {0x00170, 292, 2},
  {0x00171, 294, 2},
  {0x00172, 296, 2},
  {0x00173, 298, 2},
  {0x00174, 300, 2},
  {0x00175, 302, 2},
  {0x00176, 304, 2},
  {0x00177, 306, 2},
  {0x00178, 308, 2},
  {0x00179, 310, 2},
  {0x0017A, 312, 2},
  {0x0017B, 314, 2},
  {0x0017C, 316, 2},
  {0x0017D, 318, 2},
  {0x0017E, 320, 2},
  {0x001A0, 322, 2},
  {0x001A1, 324, 2},
  {0x001AF, 326, 2},
  {0x001B0, 328, 2},
  {0x001CD, 330, 2},
  {0x001CE, 332, 2},
  {0x001CF, 334, 2},
  {0x001D0, 336, 2},
  {0x001D1, 338, 2},
  {0x001D2, 340, 2},
  {0x001D3, 342, 2},
  {0x001D4, 344, 2},
  {0x001D5, 346, 3},
  {0x001D6, 349, 3},
  {0x001D7, 352, 3},
  {0x001D8, 355, 3},
  {0x001D9, 358, 3},
  {0x001DA, 361, 3},
  {0x001DB, 364, 3},
  {0x001DC, 367, 3},
  {0x001DE, 370, 3},
  {0x001DF, 373, 3},
  {0x001E0, 376, 3},
  {0x001E1, 379, 3},
  {0x001E2, 382, 2},
  {0x001E3, 384, 2},
  {0x001E6, 386, 2},
  {0x001E7, 388, 2},
  {0x001E8, 390, 2},
  {0x001E9, 392, 2},
  {0x001EA, 394, 2},
  {0x001EB, 396, 2},
  {0x001EC, 398, 3},
  {0x001ED, 401, 3},
  {0x001EE, 404, 2},
  {0x001EF, 406, 2},
  {0x001F0, 408, 2},
  {0x001F4, 410, 2},
  {0x001F5, 412, 2},
  {0x001F8, 414, 2},
  {0x001F9, 416, 2},
  {0x001FA, 418, 3},
  {0x001FB, 421, 3},
  {0x001FC, 424, 2},
  {0x001FD, 426, 2},
  {0x001FE, 428, 2},
  {0x001FF, 430, 2},
  {0x00200, 432, 2},
  {0x00201, 434, 2},
  {0x00202, 436, 2},
  {0x00203, 438, 2},
  {0x00204, 440, 2},
  {0x00205, 442, 2},
  {0x00206, 444, 2},
  {0x00207, 446, 2},
  {0x00208, 448, 2},
  {0x00209, 450, 2},
  {0x0020A, 452, 2},
  {0x0020B, 454, 2},
  {0x0020C, 456, 2},
  {0x0020D, 458, 2},
  {0x0020E, 460, 2},
  {0x0020F, 462, 2},
  {0x00210, 464, 2},
  {0x00211, 466, 2},
  {0x00212, 468, 2},
  {0x00213, 470, 2},
  {0x00214, 472, 2},
  {0x00215, 474, 2},
  {0x00216, 476, 2},
  {0x00217, 478, 2},
  {0x00218, 480, 2},
  {0x00219, 482, 2},
  {0x0021A, 484, 2},
  {0x0021B, 486, 2},
  {0x0021E, 488, 2},
  {0x0021F, 490, 2},
  {0x00226, 492, 2},
  {0x00227, 494, 2},
  {0x00228, 496, 2},
  {0x00229, 498, 2},
  {0x0022A, 500, 3},
  {0x0022B, 503, 3},
  {0x0022C, 506, 3},
  {0x0022D, 509, 3},
  {0x0022E, 512, 2},
  {0x0022F, 514, 2},
  {0x00230, 516, 3},
  {0x00231, 519, 3},
  {0x00232, 522, 2},
  {0x00233, 524, 2},
  {0x00340, 526, 1},
  {0x00341, 527, 1},
  {0x00343, 528, 1},
  {0x00344, 529, 2},
  {0x00374, 531, 1},
  {0x0037E, 532, 1},
  {0x00385, 533, 2},
  {0x00386, 535, 2},
  {0x00387, 537, 1},
  {0x00388, 538, 2},
  {0x00389, 540, 2},
  {0x0038A, 542, 2},
  {0x0038C, 544, 2},
  {0x0038E, 546, 2},
  {0x0038F, 548, 2},
  {0x00390, 550, 3},
  {0x003AA, 553, 2},
  {0x003AB, 555, 2},
  {0x003AC, 557, 2},
  {0x003AD, 559, 2},
  {0x003AE, 561, 2},
  {0x003AF, 563, 2},
  {0x003B0, 565, 3},
  {0x003CA, 568, 2},
  {0x003CB, 570, 2},
  {0x003CC, 572, 2},
  {0x003CD, 574, 2},
  {0x003CE, 576, 2},
  {0x003D3, 578, 2},
  {0x003D4, 580, 2},
  {0x00400, 582, 2},
  {0x00401, 584, 2},
  {0x00403, 586, 2},
  {0x00407, 588, 2},
  {0x0040C, 590, 2},
  {0x0040D, 592, 2},
  {0x0040E, 594, 2},
  {0x00419, 596, 2},
  {0x00439, 598, 2},
  {0x00450, 600, 2},
  {0x00451, 602, 2},
  {0x00453, 604, 2},
  {0x00457, 606, 2},
  {0x0045C, 608, 2},
  {0x0045D, 610, 2},
  {0x0045E, 612, 2},
  {0x00476, 614, 2},
  {0x00477, 616, 2},
  {0x004C1, 618, 2},
  {0x004C2, 620, 2},
  {0x004D0, 622, 2},
  {0x004D1, 624, 2},
  {0x004D2, 626, 2},
  {0x004D3, 628, 2},
  {0x004D6, 630, 2},
  {0x004D7, 632, 2},
  {0x004DA, 634, 2},
  {0x004DB, 636, 2},
  {0x004DC, 638, 2},
  {0x004DD, 640, 2},
  {0x004DE, 642, 2},
  {0x004DF, 644, 2},
  {0x004E2, 646, 2},
  {0x004E3, 648, 2},
  {0x004E4, 650, 2},
  {0x004E5, 652, 2},
  {0x004E6, 654, 2},
  {0x004E7, 656, 2},
  {0x004EA, 658, 2},
  {0x004EB, 660, 2},
  {0x004EC, 662, 2},
  {0x004ED, 664, 2},
  {0x004EE, 666, 2},
  {0x004EF, 668, 2},
  {0x004F0, 670, 2},
  {0x004F1, 672, 2},
  {0x004F2, 674, 2},
  {0x004F3, 676, 2},
  {0x004F4, 678, 2},
  {0x004F5, 680, 2},
  {0x004F8, 682, 2},
  {0x004F9, 684, 2},
  {0x00622, 686, 2},
  {0x00623, 688, 2},
  {0x00624, 690, 2},
  {0x00625, 692, 2},
  {0x00626, 694, 2},
  {0x006C0, 696, 2},
  {0x006C2, 698, 2},
  {0x006D3, 700, 2},
  {0x00929, 702, 2},
  {0x00931, 704, 2},
  {0x00934, 706, 2},
  {0x00958, 708, 2},
  {0x00959, 710, 2},
  {0x0095A, 712, 2},
  {0x0095B, 714, 2},
  {0x0095C, 716, 2},
  {0x0095D, 718, 2},
  {0x0095E, 720, 2},
  {0x0095F, 722, 2},
  {0x009CB, 724, 2},
  {0x009CC, 726, 2},
  {0x009DC, 728, 2},
  {0x009DD, 730, 2},
  {0x009DF, 732, 2},
  {0x00A33, 734, 2},
  {0x00A36, 736, 2},
  {0x00A59, 738, 2},
  {0x00A5A, 740, 2},
  {0x00A5B, 742, 2},
  {0x00A5E, 744, 2},
  {0x00B48, 746, 2},
  {0x00B4B, 748, 2},
  {0x00B4C, 750, 2},
  {0x00B5C, 752, 2},
  {0x00B5D, 754, 2},
  {0x00B94, 756, 2},
  {0x00BCA, 758, 2},
  {0x00BCB, 760, 2},
  {0x00BCC, 762, 2},
  {0x00C48, 764, 2},
  {0x00CC0, 766, 2},
  {0x00CC7, 768, 2},
  {0x00CC8, 770, 2},
  {0x00CCA, 772, 2},
  {0x00CCB, 774, 3},
  {0x00D4A, 777, 2},
  {0x00D4B, 779, 2},
  {0x00D4C, 781, 2},
  {0x00DDA, 783, 2},
  {0x00DDC, 785, 2},
  {0x00DDD, 787, 3},
  {0x00DDE, 790, 2},
  {0x00F43, 792, 2},
  {0x00F4D, 794, 2},
  {0x00F52, 796, 2},
  {0x00F57, 798, 2},
  {0x00F5C, 800, 2},
  {0x00F69, 802, 2},
  {0x00F73, 804, 2},
  {0x00F75, 806, 2},
  {0x00F76, 808, 2},
  {0x00F78, 810, 2},
  {0x00F81, 812, 2},
  {0x00F93, 814, 2},
  {0x00F9D, 816, 2},
  {0x00FA2, 818, 2},
  {0x00FA7, 820, 2},
  {0x00FAC, 822, 2},
  {0x00FB9, 824, 2},
  {0x01026, 826, 2},
  {0x01B06, 828, 2},
  {0x01B08, 830, 2},
  {0x01B0A, 832, 2},
  {0x01B0C, 834, 2},
  {0x01B0E, 836, 2},
  {0x01B12, 838, 2},
  {0x01B3B, 840, 2},
  {0x01B3D, 842, 2},
  {0x01B40, 844, 2},
  {0x01B41, 846, 2},
  {0x01B43, 848, 2},
  {0x01E00, 850, 2},
  {0x01E01, 852, 2},
  {0x01E02, 854, 2},
  {0x01E03, 856, 2},
  {0x01E04, 858, 2},
  {0x01E05, 860, 2},
  {0x01E06, 862, 2},
  {0x01E07, 864, 2},
  {0x01E08, 866, 3},
  {0x01E09, 869, 3},
  {0x01E0A, 872, 2},
  {0x01E0B, 874, 2},
  {0x01E0C, 876, 2},
  {0x01E0D, 878, 2},
  {0x01E0E, 880, 2},
  {0x01E0F, 882, 2},
  {0x01E10, 884, 2},
  {0x01E11, 886, 2},
  {0x01E12, 888, 2},
  {0x01E13, 890, 2},
  {0x01E14, 892, 3},
  {0x01E15, 895, 3},
  {0x01E16, 898, 3},
  {0x01E17, 901, 3},
  {0x01E18, 904, 2},
  {0x01E19, 906, 2},
  {0x01E1A, 908, 2},
  {0x01E1B, 910, 2},
  {0x01E1C, 912, 3},
  {0x01E1D, 915, 3},
  {0x01E1E, 918, 2},
  {0x01E1F, 920, 2},
  {0x01E20, 922, 2},
  {0x01E21, 924, 2},
  {0x01E22, 926, 2},
  {0x01E23, 928, 2},
  {0x01E24, 930, 2},
  {0x01E25, 932, 2},
  {0x01E26, 934, 2},
  {0x01E27, 936, 2},
  {0x01E28, 938, 2},
  {0x01E29, 940, 2},
  {0x01E2A, 942, 2},
  {0x01E2B, 944, 2},
  {0x01E2C, 946, 2},
  {0x01E2D, 948, 2},
  {0x01E2E, 950, 3},
  {0x01E2F, 953, 3},
  {0x01E30, 956, 2},
  {0x01E31, 958, 2},
  {0x01E32, 960, 2},
  {0x01E33, 962, 2},
  {0x01E34, 964, 2},
  {0x01E35, 966, 2},
  {0x01E36, 968, 2},
  {0x01E37, 970, 2},
  {0x01E38, 972, 3},
  {0x01E39, 975, 3},
  {0x01E3A, 978, 2},
  {0x01E3B, 980, 2},
  {0x01E3C, 982, 2},
  {0x01E3D, 984, 2},
  {0x01E3E, 986, 2},
  {0x01E3F, 988, 2},
  {0x01E40, 990, 2},
  {0x01E41, 992, 2},
  {0x01E42, 994, 2},
  {0x01E43, 996, 2},
  {0x01E44, 998, 2},
  {0x01E45, 1000, 2},
  {0x01E46, 1002, 2},
  {0x01E47, 1004, 2},
  {0x01E48, 1006, 2},
  {0x01E49, 1008, 2},
  {0x01E4A, 1010, 2},
  {0x01E4B, 1012, 2},
  {0x01E4C, 1014, 3},
  {0x01E4D, 1017, 3},
  {0x01E4E, 1020, 3},
  {0x01E4F, 1023, 3},
  {0x01E50, 1026, 3},
  {0x01E51, 1029, 3},
  {0x01E52, 1032, 3},
  {0x01E53, 1035, 3},
  {0x01E54, 1038, 2},
  {0x01E55, 1040, 2},
  {0x01E56, 1042, 2},
  {0x01E57, 1044, 2},
  {0x01E58, 1046, 2},
  {0x01E59, 1048, 2},
  {0x01E5A, 1050, 2},
  {0x01E5B, 1052, 2},
  {0x01E5C, 1054, 3},
  {0x01E5D, 1057, 3},
  {0x01E5E, 1060, 2},
  {0x01E5F, 1062, 2},
  {0x01E60, 1064, 2},
  {0x01E61, 1066, 2},
  {0x01E62, 1068, 2},
  {0x01E63, 1070, 2},
  {0x01E64, 1072, 3},
  {0x01E65, 1075, 3},
  {0x01E66, 1078, 3},
  {0x01E67, 1081, 3},
  {0x01E68, 1084, 3},
  {0x01E69, 1087, 3},
  {0x01E6A, 1090, 2},
  {0x01E6B, 1092, 2},
  {0x01E6C, 1094, 2},
  {0x01E6D, 1096, 2},
  {0x01E6E, 1098, 2},
  {0x01E6F, 1100, 2},
  {0x01E70, 1102, 2},
  {0x01E71, 1104, 2},
  {0x01E72, 1106, 2},
  {0x01E73, 1108, 2},
  {0x01E74, 1110, 2},
  {0x01E75, 1112, 2},
  {0x01E76, 1114, 2},
  {0x01E77, 1116, 2},
  {0x01E78, 1118, 3},
  {0x01E79, 1121, 3},
  {0x01E7A, 1124, 3},
  {0x01E7B, 1127, 3},
  {0x01E7C, 1130, 2},
  {0x01E7D, 1132, 2},
  {0x01E7E, 1134, 2},
  {0x01E7F, 1136, 2},
  {0x01E80, 1138, 2},
  {0x01E81, 1140, 2},
  {0x01E82, 1142, 2},
  {0x01E83, 1144, 2},
  {0x01E84, 1146, 2},
  {0x01E85, 1148, 2},
  {0x01E86, 1150, 2},
  {0x01E87, 1152, 2},
  {0x01E88, 1154, 2},
  {0x01E89, 1156, 2},
  {0x01E8A, 1158, 2},
  {0x01E8B, 1160, 2},
  {0x01E8C, 1162, 2},
  {0x01E8D, 1164, 2},
  {0x01E8E, 1166, 2},
  {0x01E8F, 1168, 2},
  {0x01E90, 1170, 2},
  {0x01E91, 1172, 2},
  {0x01E92, 1174, 2},
  {0x01E93, 1176, 2},
  {0x01E94, 1178, 2},
  {0x01E95, 1180, 2},
  {0x01E96, 1182, 2},
  {0x01E97, 1184, 2},
  {0x01E98, 1186, 2},
  {0x01E99, 1188, 2},
  {0x01E9B, 1190, 2},
  {0x01EA0, 1192, 2},
  {0x01EA1, 1194, 2},
  {0x01EA2, 1196, 2},
  {0x01EA3, 1198, 2},
  {0x01EA4, 1200, 3},
  {0x01EA5, 1203, 3},
  {0x01EA6, 1206, 3},
  {0x01EA7, 1209, 3},
  {0x01EA8, 1212, 3},
  {0x01EA9, 1215, 3},
  {0x01EAA, 1218, 3},
  {0x01EAB, 1221, 3},
  {0x01EAC, 1224, 3},
  {0x01EAD, 1227, 3},
  {0x01EAE, 1230, 3},
  {0x01EAF, 1233, 3},
  {0x01EB0, 1236, 3},
  {0x01EB1, 1239, 3},
  {0x01EB2, 1242, 3},
  {0x01EB3, 1245, 3},
  {0x01EB4, 1248, 3},
  {0x01EB5, 1251, 3},
  {0x01EB6, 1254, 3},
  {0x01EB7, 1257, 3},
  {0x01EB8, 1260, 2},
  {0x01EB9, 1262, 2},
  {0x01EBA, 1264, 2},
  {0x01EBB, 1266, 2},
  {0x01EBC, 1268, 2},
  {0x01EBD, 1270, 2},
  {0x01EBE, 1272, 3},
  {0x01EBF, 1275, 3},
  {0x01EC0, 1278, 3},
  {0x01EC1, 1281, 3},
  {0x01EC2, 1284, 3},
  {0x01EC3, 1287, 3},
  {0x01EC4, 1290, 3},
  {0x01EC5, 1293, 3},
  {0x01EC6, 1296, 3},
  {0x01EC7, 1299, 3},
  {0x01EC8, 1302, 2},
  {0x01EC9, 1304, 2},
  {0x01ECA, 1306, 2},
  {0x01ECB, 1308, 2},
  {0x01ECC, 1310, 2},
  {0x01ECD, 1312, 2},
  {0x01ECE, 1314, 2},
  {0x01ECF, 1316, 2},
  {0x01ED0, 1318, 3},
  {0x01ED1, 1321, 3},
  {0x01ED2, 1324, 3},
  {0x01ED3, 1327, 3},
  {0x01ED4, 1330, 3},
  {0x01ED5, 1333, 3},
  {0x01ED6, 1336, 3},
  {0x01ED7, 1339, 3},
  {0x01ED8, 1342, 3},
  {0x01ED9, 1345, 3},
  {0x01EDA, 1348, 3},
  {0x01EDB, 1351, 3},
  {0x01EDC, 1354, 3},
  {0x01EDD, 1357, 3},
  {0x01EDE, 1360, 3},
  {0x01EDF, 1363, 3},
  {0x01EE0, 1366, 3},
  {0x01EE1, 1369, 3},
  {0x01EE2, 1372, 3},
  {0x01EE3, 1375, 3},
  {0x01EE4, 1378, 2},
  {0x01EE5, 1380, 2},
  {0x01EE6, 1382, 2},
  {0x01EE7, 1384, 2},
  {0x01EE8, 1386, 3},
  {0x01EE9, 1389, 3},
  {0x01EEA, 1392, 3},
  {0x01EEB, 1395, 3},
  {0x01EEC, 1398, 3},
  {0x01EED, 1401, 3},
  {0x01EEE, 1404, 3},
  {0x01EEF, 1407, 3},
  {0x01EF0, 1410, 3},
  {0x01EF1, 1413, 3},
  {0x01EF2, 1416, 2},
  {0x01EF3, 1418, 2},
  {0x01EF4, 1420, 2},
  {0x01EF5, 1422, 2},
  {0x01EF6, 1424, 2},
  {0x01EF7, 1426, 2},
  {0x01EF8, 1428, 2},
  {0x01EF9, 1430, 2},
  {0x01F00, 1432, 2},
  {0x01F01, 1434, 2},
  {0x01F02, 1436, 3},
  {0x01F03, 1439, 3},
  {0x01F04, 1442, 3},
  {0x01F05, 1445, 3},
  {0x01F06, 1448, 3},
  {0x01F07, 1451, 3},
  {0x01F08, 1454, 2},
  {0x01F09, 1456, 2},
  {0x01F0A, 1458, 3},
  {0x01F0B, 1461, 3},
  {0x01F0C, 1464, 3},
  {0x01F0D, 1467, 3},
  {0x01F0E, 1470, 3},
  {0x01F0F, 1473, 3},
  {0x01F10, 1476, 2},
  {0x01F11, 1478, 2},
  {0x01F12, 1480, 3},
  {0x01F13, 1483, 3},
  {0x01F14, 1486, 3},
  {0x01F15, 1489, 3},
  {0x01F18, 1492, 2},
  {0x01F19, 1494, 2},
  {0x01F1A, 1496, 3},
  {0x01F1B, 1499, 3},
  {0x01F1C, 1502, 3},
  {0x01F1D, 1505, 3},
  {0x01F20, 1508, 2},
  {0x01F21, 1510, 2},
  {0x01F22, 1512, 3},
  {0x01F23, 1515, 3},
  {0x01F24, 1518, 3},
  {0x01F25, 1521, 3},
  {0x01F26, 1524, 3},
  {0x01F27, 1527, 3},
  {0x01F28, 1530, 2},
  {0x01F29, 1532, 2},
  {0x01F2A, 1534, 3},
  {0x01F2B, 1537, 3},
  {0x01F2C, 1540, 3},
  {0x01F2D, 1543, 3},
  {0x01F2E, 1546, 3},
  {0x01F2F, 1549, 3},
  {0x01F30, 1552, 2},
  {0x01F31, 1554, 2},
  {0x01F32, 1556, 3},
  {0x01F33, 1559, 3},
  {0x01F34, 1562, 3},
  {0x01F35, 1565, 3},
  {0x01F36, 1568, 3},
  {0x01F37, 1571, 3},
  {0x01F38, 1574, 2},
  {0x01F39, 1576, 2},
  {0x01F3A, 1578, 3},
  {0x01F3B, 1581, 3},
  {0x01F3C, 1584, 3},
  {0x01F3D, 1587, 3},
  {0x01F3E, 1590, 3},
  {0x01F3F, 1593, 3},
  {0x01F40, 1596, 2},
  {0x01F41, 1598, 2},
  {0x01F42, 1600, 3},
  {0x01F43, 1603, 3},
  {0x01F44, 1606, 3},
  {0x01F45, 1609, 3},
  {0x01F48, 1612, 2},
  {0x01F49, 1614, 2},
  {0x01F4A, 1616, 3},
  {0x01F4B, 1619, 3},
  {0x01F4C, 1622, 3},
  {0x01F4D, 1625, 3},
  {0x01F50, 1628, 2},
  {0x01F51, 1630, 2},
  {0x01F52, 1632, 3},
  {0x01F53, 1635, 3},
  {0x01F54, 1638, 3},
  {0x01F55, 1641, 3},
  {0x01F56, 1644, 3},
  {0x01F57, 1647, 3},
  {0x01F59, 1650, 2},
  {0x01F5B, 1652, 3},
  {0x01F5D, 1655, 3},
  {0x01F5F, 1658, 3},
  {0x01F60, 1661, 2},
  {0x01F61, 1663, 2},
  {0x01F62, 1665, 3},
  {0x01F63, 1668, 3},
  {0x01F64, 1671, 3},
  {0x01F65, 1674, 3},
  {0x01F66, 1677, 3},
  {0x01F67, 1680, 3},
  {0x01F68, 1683, 2},
  {0x01F69, 1685, 2},
  {0x01F6A, 1687, 3},
  {0x01F6B, 1690, 3},
  {0x01F6C, 1693, 3},
  {0x01F6D, 1696, 3},
  {0x01F6E, 1699, 3},
  {0x01F6F, 1702, 3},
  {0x01F70, 1705, 2},
  {0x01F71, 1707, 2},
  {0x01F72, 1709, 2},
  {0x01F73, 1711, 2},
  {0x01F74, 1713, 2},
  {0x01F75, 1715, 2},
  {0x01F76, 1717, 2},
  {0x01F77, 1719, 2},
  {0x01F78, 1721, 2},
  {0x01F79, 1723, 2},
  {0x01F7A, 1725, 2},
  {0x01F7B, 1727, 2},
  {0x01F7C, 1729, 2},
  {0x01F7D, 1731, 2},
  {0x01F80, 1733, 3},
  {0x01F81, 1736, 3},
  {0x01F82, 1739, 4},
  {0x01F83, 1743, 4},
  {0x01F84, 1747, 4},
  {0x01F85, 1751, 4},
  {0x01F86, 1755, 4},
  {0x01F87, 1759, 4},
  {0x01F88, 1763, 3},
  {0x01F89, 1766, 3},
  {0x01F8A, 1769, 4},
  {0x01F8B, 1773, 4},
  {0x01F8C, 1777, 4},
  {0x01F8D, 1781, 4},
  {0x01F8E, 1785, 4},
  {0x01F8F, 1789, 4},
  {0x01F90, 1793, 3},
  {0x01F91, 1796, 3},
  {0x01F92, 1799, 4},
  {0x01F93, 1803, 4},
  {0x01F94, 1807, 4},
  {0x01F95, 1811, 4},
  {0x01F96, 1815, 4},
  {0x01F97, 1819, 4},
  {0x01F98, 1823, 3},
  {0x01F99, 1826, 3},
  {0x01F9A, 1829, 4},
  {0x01F9B, 1833, 4},
  {0x01F9C, 1837, 4},
  {0x01F9D, 1841, 4},
  {0x01F9E, 1845, 4},
  {0x01F9F, 1849, 4},
  {0x01FA0, 1853, 3},
  {0x01FA1, 1856, 3},
  {0x01FA2, 1859, 4},
  {0x01FA3, 1863, 4},
  {0x01FA4, 1867, 4},
  {0x01FA5, 1871, 4},
  {0x01FA6, 1875, 4},
  {0x01FA7, 1879, 4},
  {0x01FA8, 1883, 3},
  {0x01FA9, 1886, 3},
  {0x01FAA, 1889, 4},
  {0x01FAB, 1893, 4},
  {0x01FAC, 1897, 4},
  {0x01FAD, 1901, 4},
  {0x01FAE, 1905, 4},
  {0x01FAF, 1909, 4},
  {0x01FB0, 1913, 2},
  {0x01FB1, 1915, 2},
  {0x01FB2, 1917, 3},
  {0x01FB3, 1920, 2},
  {0x01FB4, 1922, 3},
  {0x01FB6, 1925, 2},
  {0x01FB7, 1927, 3},
  {0x01FB8, 1930, 2},
  {0x01FB9, 1932, 2},
  {0x01FBA, 1934, 2},
  {0x01FBB, 1936, 2},
  {0x01FBC, 1938, 2},
  {0x01FBE, 1940, 1},
  {0x01FC1, 1941, 2},
  {0x01FC2, 1943, 3},
  {0x01FC3, 1946, 2},
  {0x01FC4, 1948, 3},
  {0x01FC6, 1951, 2},
  {0x01FC7, 1953, 3},
  {0x01FC8, 1956, 2},
  {0x01FC9, 1958, 2},
  {0x01FCA, 1960, 2},
  {0x01FCB, 1962, 2},
  {0x01FCC, 1964, 2},
  {0x01FCD, 1966, 2},
  {0x01FCE, 1968, 2},
  {0x01FCF, 1970, 2},
  {0x01FD0, 1972, 2},
  {0x01FD1, 1974, 2},
  {0x01FD2, 1976, 3},
  {0x01FD3, 1979, 3},
  {0x01FD6, 1982, 2},
  {0x01FD7, 1984, 3},
  {0x01FD8, 1987, 2},
  {0x01FD9, 1989, 2},
  {0x01FDA, 1991, 2},
  {0x01FDB, 1993, 2},
  {0x01FDD, 1995, 2},
  {0x01FDE, 1997, 2},
  {0x01FDF, 1999, 2},
  {0x01FE0, 2001, 2},
  {0x01FE1, 2003, 2},
  {0x01FE2, 2005, 3},
  {0x01FE3, 2008, 3},
  {0x01FE4, 2011, 2},
  {0x01FE5, 2013, 2},
  {0x01FE6, 2015, 2},
  {0x01FE7, 2017, 3},
  {0x01FE8, 2020, 2},
  {0x01FE9, 2022, 2},
  {0x01FEA, 2024, 2},
  {0x01FEB, 2026, 2},
  {0x01FEC, 2028, 2},
  {0x01FED, 2030, 2},
  {0x01FEE, 2032, 2},
  {0x01FEF, 2034, 1},
  {0x01FF2, 2035, 3},
  {0x01FF3, 2038, 2},
  {0x01FF4, 2040, 3},
  {0x01FF6, 2043, 2},
  {0x01FF7, 2045, 3},
  {0x01FF8, 2048, 2},
  {0x01FF9, 2050, 2},
  {0x01FFA, 2052, 2},
  {0x01FFB, 2054, 2},
  {0x01FFC, 2056, 2},
  {0x01FFD, 2058, 1},
  {0x02000, 2059, 1},
  {0x02001, 2060, 1},
  {0x02126, 2061, 1},
  {0x0212A, 2062, 1},
  {0x0212B, 2063, 2},
  {0x0219A, 2065, 2},
  {0x0219B, 2067, 2},
  {0x021AE, 2069, 2},
  {0x021CD, 2071, 2},
  {0x021CE, 2073, 2},
  {0x021CF, 2075, 2},
  {0x02204, 2077, 2},
  {0x02209, 2079, 2},
  {0x0220C, 2081, 2},
  {0x02224, 2083, 2},
  {0x02226, 2085, 2},
  {0x02241, 2087, 2},
  {0x02244, 2089, 2},
  {0x02247, 2091, 2},
  {0x02249, 2093, 2},
  {0x02260, 2095, 2},
  {0x02262, 2097, 2},
  {0x0226D, 2099, 2},
  {0x0226E, 2101, 2},
  {0x0226F, 2103, 2},
  {0x02270, 2105, 2},
  {0x02271, 2107, 2},
  {0x02274, 2109, 2},
  {0x02275, 2111, 2},
  {0x02278, 2113, 2},
  {0x02279, 2115, 2},
  {0x02280, 2117, 2},
  {0x02281, 2119, 2},
  {0x02284, 2121, 2},
  {0x02285, 2123, 2},
  {0x02288, 2125, 2},
  {0x02289, 2127, 2},
  {0x022AC, 2129, 2},
  {0x022AD, 2131, 2},
  {0x022AE, 2133, 2},
  {0x022AF, 2135, 2},
  {0x022E0, 2137, 2},
  {0x022E1, 2139, 2},
  {0x022E2, 2141, 2},
  {0x022E3, 2143, 2},
  {0x022EA, 2145, 2},
  {0x022EB, 2147, 2},
  {0x022EC, 2149, 2},
  {0x022ED, 2151, 2},
  {0x02329, 2153, 1},
  {0x0232A, 2154, 1},
  {0x02ADC, 2155, 2},
  {0x0304C, 2157, 2},
  {0x0304E, 2159, 2},
  {0x03050, 2161, 2},
  {0x03052, 2163, 2},
  {0x03054, 2165, 2},
  {0x03056, 2167, 2},
  {0x03058, 2169, 2},
  {0x0305A, 2171, 2},
  {0x0305C, 2173, 2},
  {0x0305E, 2175, 2},
  {0x03060, 2177, 2},
  {0x03062, 2179, 2},
  {0x03065, 2181, 2},
  {0x03067, 2183, 2},
  {0x03069, 2185, 2},
  {0x03070, 2187, 2},
  {0x03071, 2189, 2},
  {0x03073, 2191, 2},
  {0x03074, 2193, 2},
  {0x03076, 2195, 2},
  {0x03077, 2197, 2},
  {0x03079, 2199, 2},
  {0x0307A, 2201, 2},
  {0x0307C, 2203, 2},
  {0x0307D, 2205, 2},
  {0x03094, 2207, 2},
  {0x0309E, 2209, 2},
  {0x030AC, 2211, 2},
  {0x030AE, 2213, 2},
  {0x030B0, 2215, 2},
  {0x030B2, 2217, 2},
  {0x030B4, 2219, 2},
  {0x030B6, 2221, 2},
  {0x030B8, 2223, 2},
  {0x030BA, 2225, 2},
  {0x030BC, 2227, 2},
  {0x030BE, 2229, 2},
  {0x030C0, 2231, 2},
  {0x030C2, 2233, 2},
  {0x030C5, 2235, 2},
  {0x030C7, 2237, 2},
  {0x030C9, 2239, 2},
  {0x030D0, 2241, 2},
  {0x030D1, 2243, 2},
  {0x030D3, 2245, 2},
  {0x030D4, 2247, 2},
  {0x030D6, 2249, 2},
  {0x030D7, 2251, 2},
  {0x030D9, 2253, 2},
  {0x030DA, 2255, 2},
  {0x030DC, 2257, 2},
  {0x030DD, 2259, 2},
  {0x030F4, 2261, 2},
  {0x030F7, 2263, 2},
  {0x030F8, 2265, 2},
  {0x030F9, 2267, 2},
  {0x030FA, 2269, 2},
  {0x030FE, 2271, 2},
  {0x0F900, 2273, 1},
  {0x0F901, 2274, 1},
  {0x0F902, 2275, 1},
  {0x0F903, 2276, 1},
  {0x0F904, 2277, 1},
  {0x0F905, 2278, 1},
  {0x0F906, 2279, 1},
  {0x0F907, 2280, 1},
  {0x0F908, 2281, 1},
  {0x0F909, 2282, 1},
  {0x0F90A, 2283, 1},
  {0x0F90B, 2284, 1},
  {0x0F90C, 2285, 1},
  {0x0F90D, 2286, 1},
  {0x0F90E, 2287, 1},
  {0x0F90F, 2288, 1},
  {0x0F910, 2289, 1},
  {0x0F911, 2290, 1},
  {0x0F912, 2291, 1},
  {0x0F913, 2292, 1},
  {0x0F914, 2293, 1},
  {0x0F915, 2294, 1},
  {0x0F916, 2295, 1},
  {0x0F917, 2296, 1},
  {0x0F918, 2297, 1},
  {0x0F919, 2298, 1},
  {0x0F91A, 2299, 1},
  {0x0F91B, 2300, 1},
  {0x0F91C, 2301, 1},
  {0x0F91D, 2302, 1},
  {0x0F91E, 2303, 1},
  {0x0F91F, 2304, 1},
  {0x0F920, 2305, 1},
  {0x0F921, 2306, 1},
  {0x0F922, 2307, 1},
  {0x0F923, 2308, 1},
  {0x0F924, 2309, 1},
  {0x0F925, 2310, 1},
  {0x0F926, 2311, 1},
  {0x0F927, 2312, 1},
  {0x0F928, 2313, 1},
  {0x0F929, 2314, 1},
  {0x0F92A, 2315, 1},
  {0x0F92B, 2316, 1},
  {0x0F92C, 2317, 1},
  {0x0F92D, 2318, 1},
  {0x0F92E, 2319, 1},
  {0x0F92F, 2320, 1},
  {0x0F930, 2321, 1},
  {0x0F931, 2322, 1},
  {0x0F932, 2323, 1},
  {0x0F933, 2324, 1},
  {0x0F934, 2325, 1},
  {0x0F935, 2326, 1},
  {0x0F936, 2327, 1},
  {0x0F937, 2328, 1},
  {0x0F938, 2329, 1},
  {0x0F939, 2330, 1},
  {0x0F93A, 2331, 1},
  {0x0F93B, 2332, 1},
  {0x0F93C, 2333, 1},
  {0x0F93D, 2334, 1},
  {0x0F93E, 2335, 1},
  {0x0F93F, 2336, 1},
  {0x0F940, 2337, 1},
  {0x0F941, 2338, 1},
  {0x0F942, 2339, 1},
  {0x0F943, 2340, 1},
  {0x0F944, 2341, 1},
  {0x0F945, 2342, 1},
  {0x0F946, 2343, 1},
  {0x0F947, 2344, 1},
  {0x0F948, 2345, 1},
  {0x0F949, 2346, 1},
  {0x0F94A, 2347, 1},
  {0x0F94B, 2348, 1},
  {0x0F94C, 2349, 1},
  {0x0F94D, 2350, 1},
  {0x0F94E, 2351, 1},
  {0x0F94F, 2352, 1},
  {0x0F950, 2353, 1},
  {0x0F951, 2354, 1},
  {0x0F952, 2355, 1},
  {0x0F953, 2356, 1},
  {0x0F954, 2357, 1},
  {0x0F955, 2358, 1},
  {0x0F956, 2359, 1},
  {0x0F957, 2360, 1},
  {0x0F958, 2361, 1},
  {0x0F959, 2362, 1},
  {0x0F95A, 2363, 1},
  {0x0F95B, 2364, 1},
  {0x0F95C, 2365, 1},
  {0x0F95D, 2366, 1},
  {0x0F95E, 2367, 1},
  {0x0F95F, 2368, 1},
  {0x0F960, 2369, 1},
  {0x0F961, 2370, 1},
  {0x0F962, 2371, 1},
  {0x0F963, 2372, 1},
  {0x0F964, 2373, 1},
  {0x0F965, 2374, 1},
  {0x0F966, 2375, 1},
  {0x0F967, 2376, 1},
  {0x0F968, 2377, 1},
  {0x0F969, 2378, 1},
  {0x0F96A, 2379, 1},
  {0x0F96B, 2380, 1},
  {0x0F96C, 2381, 1},
  {0x0F96D, 2382, 1},
  {0x0F96E, 2383, 1},
  {0x0F96F, 2384, 1},
  {0x0F970, 2385, 1},
  {0x0F971, 2386, 1},
  {0x0F972, 2387, 1},
  {0x0F973, 2388, 1},
  {0x0F974, 2389, 1},
  {0x0F975, 2390, 1},
  {0x0F976, 2391, 1},
  {0x0F977, 2392, 1},
  {0x0F978, 2393, 1},
  {0x0F979, 2394, 1},
  {0x0F97A, 2395, 1},
  {0x0F97B, 2396, 1},
  {0x0F97C, 2397, 1},
  {0x0F97D, 2398, 1},
  {0x0F97E, 2399, 1},
  {0x0F97F, 2400, 1},
  {0x0F980, 2401, 1},
  {0x0F981, 2402, 1},
  {0x0F982, 2403, 1},
  {0x0F983, 2404, 1},
  {0x0F984, 2405, 1},
  {0x0F985, 2406, 1},
  {0x0F986, 2407, 1},
  {0x0F987, 2408, 1},
  {0x0F988, 2409, 1},
  {0x0F989, 2410, 1},
  {0x0F98A, 2411, 1},
  {0x0F98B, 2412, 1},
  {0x0F98C, 2413, 1},
  {0x0F98D, 2414, 1},
  {0x0F98E, 2415, 1},
  {0x0F98F, 2416, 1},
  {0x0F990, 2417, 1},
  {0x0F991, 2418, 1},
  {0x0F992, 2419, 1},
  {0x0F993, 2420, 1},
  {0x0F994, 2421, 1},
  {0x0F995, 2422, 1},
  {0x0F996, 2423, 1},
  {0x0F997, 2424, 1},
  {0x0F998, 2425, 1},
  {0x0F999, 2426, 1},
  {0x0F99A, 2427, 1},
  {0x0F99B, 2428, 1},
  {0x0F99C, 2429, 1},
  {0x0F99D, 2430, 1},
  {0x0F99E, 2431, 1},
  {0x0F99F, 2432, 1},
  {0x0F9A0, 2433, 1},
  {0x0F9A1, 2434, 1},
  {0x0F9A2, 2435, 1},
  {0x0F9A3, 2436, 1},
  {0x0F9A4, 2437, 1},
  {0x0F9A5, 2438, 1},
  {0x0F9A6, 2439, 1},
  {0x0F9A7, 2440, 1},
  {0x0F9A8, 2441, 1},
  {0x0F9A9, 2442, 1},
  {0x0F9AA, 2443, 1},
  {0x0F9AB, 2444, 1},
  {0x0F9AC, 2445, 1},
  {0x0F9AD, 2446, 1},
  {0x0F9AE, 2447, 1},
  {0x0F9AF, 2448, 1},
  {0x0F9B0, 2449, 1},
  {0x0F9B1, 2450, 1},
  {0x0F9B2, 2451, 1},
  {0x0F9B3, 2452, 1},
  {0x0F9B4, 2453, 1},
  {0x0F9B5, 2454, 1},
  {0x0F9B6, 2455, 1},
  {0x0F9B7, 2456, 1},
  {0x0F9B8, 2457, 1},
  {0x0F9B9, 2458, 1},
  {0x0F9BA, 2459, 1},
  {0x0F9BB, 2460, 1},
  {0x0F9BC, 2461, 1},
  {0x0F9BD, 2462, 1},
  {0x0F9BE, 2463, 1},
  {0x0F9BF, 2464, 1},
  {0x0F9C0, 2465, 1},
  {0x0F9C1, 2466, 1},
  {0x0F9C2, 2467, 1},
  {0x0F9C3, 2468, 1},
  {0x0F9C4, 2469, 1},
  {0x0F9C5, 2470, 1},
  {0x0F9C6, 2471, 1},
  {0x0F9C7, 2472, 1},
  {0x0F9C8, 2473, 1},
  {0x0F9C9, 2474, 1},
  {0x0F9CA, 2475, 1},
  {0x0F9CB, 2476, 1},
  {0x0F9CC, 2477, 1},
  {0x0F9CD, 2478, 1},
  {0x0F9CE, 2479, 1},
  {0x0F9CF, 2480, 1},
  {0x0F9D0, 2481, 1},
  {0x0F9D1, 2482, 1},
  {0x0F9D2, 2483, 1},
  {0x0F9D3, 2484, 1},
  {0x0F9D4, 2485, 1},
  {0x0F9D5, 2486, 1},
  {0x0F9D6, 2487, 1},
  {0x0F9D7, 2488, 1},
  {0x0F9D8, 2489, 1},
  {0x0F9D9, 2490, 1},
  {0x0F9DA, 2491, 1},
  {0x0F9DB, 2492, 1},
  {0x0F9DC, 2493, 1},
  {0x0F9DD, 2494, 1},
  {0x0F9DE, 2495, 1},
  {0x0F9DF, 2496, 1},
  {0x0F9E0, 2497, 1},
  {0x0F9E1, 2498, 1},
  {0x0F9E2, 2499, 1},
  {0x0F9E3, 2500, 1},
  {0x0F9E4, 2501, 1},
  {0x0F9E5, 2502, 1},
  {0x0F9E6, 2503, 1},
  {0x0F9E7, 2504, 1},
  {0x0F9E8, 2505, 1},
  {0x0F9E9, 2506, 1},
  {0x0F9EA, 2507, 1},
  {0x0F9EB, 2508, 1},
  {0x0F9EC, 2509, 1},
  {0x0F9ED, 2510, 1},
  {0x0F9EE, 2511, 1},
  {0x0F9EF, 2512, 1},
  {0x0F9F0, 2513, 1},
  {0x0F9F1, 2514, 1},
  {0x0F9F2, 2515, 1},
  {0x0F9F3, 2516, 1},
  {0x0F9F4, 2517, 1},
  {0x0F9F5, 2518, 1},
  {0x0F9F6, 2519, 1},
  {0x0F9F7, 2520, 1},
  {0x0F9F8, 2521, 1},
  {0x0F9F9, 2522, 1},
  {0x0F9FA, 2523, 1},
  {0x0F9FB, 2524, 1},
  {0x0F9FC, 2525, 1},
  {0x0F9FD, 2526, 1},
  {0x0F9FE, 2527, 1},
  {0x0F9FF, 2528, 1},
  {0x0FA00, 2529, 1},
  {0x0FA01, 2530, 1},
  {0x0FA02, 2531, 1},
  {0x0FA03, 2532, 1},
  {0x0FA04, 2533, 1},
  {0x0FA05, 2534, 1},
  {0x0FA06, 2535, 1},
  {0x0FA07, 2536, 1},
  {0x0FA08, 2537, 1},
  {0x0FA09, 2538, 1},
  {0x0FA0A, 2539, 1},
  {0x0FA0B, 2540, 1},
  {0x0FA0C, 2541, 1},
  {0x0FA0D, 2542, 1},
  {0x0FA10, 2543, 1},
  {0x0FA12, 2544, 1},
  {0x0FA15, 2545, 1},
  {0x0FA16, 2546, 1},
  {0x0FA17, 2547, 1},
  {0x0FA18, 2548, 1},
  {0x0FA19, 2549, 1},
  {0x0FA1A, 2550, 1},
  {0x0FA1B, 2551, 1},
  {0x0FA1C, 2552, 1},
  {0x0FA1D, 2553, 1},
  {0x0FA1E, 2554, 1},
  {0x0FA20, 2555, 1},
  {0x0FA22, 2556, 1},
  {0x0FA25, 2557, 1},
  {0x0FA26, 2558, 1},
  {0x0FA2A, 2559, 1},
  {0x0FA2B, 2560, 1},
  {0x0FA2C, 2561, 1},
  {0x0FA2D, 2562, 1},
  {0x0FA2E, 2563, 1},
  {0x0FA2F, 2564, 1},
  {0x0FA30, 2565, 1},
  {0x0FA31, 2566, 1},
  {0x0FA32, 2567, 1},
  {0x0FA33, 2568, 1},
  {0x0FA34, 2569, 1},
  {0x0FA35, 2570, 1},
  {0x0FA36, 2571, 1},
  {0x0FA37, 2572, 1},
  {0x0FA38, 2573, 1},
  {0x0FA39, 2574, 1},
  {0x0FA3A, 2575, 1},
  {0x0FA3B, 2576, 1},
  {0x0FA3C, 2577, 1},
  {0x0FA3D, 2578, 1},
  {0x0FA3E, 2579, 1},
  {0x0FA3F, 2580, 1},
  {0x0FA40, 2581, 1},
  {0x0FA41, 2582, 1},
  {0x0FA42, 2583, 1},
  {0x0FA43, 2584, 1},
  {0x0FA44, 2585, 1},
  {0x0FA45, 2586, 1},
  {0x0FA46, 2587, 1},
  {0x0FA47, 2588, 1},
  {0x0FA48, 2589, 1},
  {0x0FA49, 2590, 1},
  {0x0FA4A, 2591, 1},
  {0x0FA4B, 2592, 1},
  {0x0FA4C, 2593, 1},
  {0x0FA4D, 2594, 1},
  {0x0FA4E, 2595, 1},
  {0x0FA4F, 2596, 1},
  {0x0FA50, 2597, 1},
  {0x0FA51, 2598, 1},
  {0x0FA52, 2599, 1},
  {0x0FA53, 2600, 1},
  {0x0FA54, 2601, 1},
  {0x0FA55, 2602, 1},
  {0x0FA56, 2603, 1},
  {0x0FA57, 2604, 1},
  {0x0FA58, 2605, 1},
  {0x0FA59, 2606, 1},
  {0x0FA5A, 2607, 1},
  {0x0FA5B, 2608, 1},
  {0x0FA5C, 2609, 1},
  {0x0FA5D, 2610, 1},
  {0x0FA5E, 2611, 1},
  {0x0FA5F, 2612, 1},
  {0x0FA60, 2613, 1},
  {0x0FA61, 2614, 1},
  {0x0FA62, 2615, 1},
  {0x0FA63, 2616, 1},
  {0x0FA64, 2617, 1},
  {0x0FA65, 2618, 1},
  {0x0FA66, 2619, 1},
  {0x0FA67, 2620, 1},
  {0x0FA68, 2621, 1},
  {0x0FA69, 2622, 1},
  {0x0FA6A, 2623, 1},
  {0x0FA6B, 2624, 1},
  {0x0FA6C, 2625, 1},
  {0x0FA6D, 2626, 1},
  {0x0FA70, 2627, 1},
  {0x0FA71, 2628, 1},
  {0x0FA72, 2629, 1},
  {0x0FA73, 2630, 1},
  {0x0FA74, 2631, 1},
  {0x0FA75, 2632, 1},
  {0x0FA76, 2633, 1},
  {0x0FA77, 2634, 1},
  {0x0FA78, 2635, 1},
  {0x0FA79, 2636, 1},
  {0x0FA7A, 2637, 1},
  {0x0FA7B, 2638, 1},
  {0x0FA7C, 2639, 1},
  {0x0FA7D, 2640, 1},
  {0x0FA7E, 2641, 1},
  {0x0FA7F, 2642, 1},
  {0x0FA80, 2643, 1},
  {0x0FA81, 2644, 1},
  {0x0FA82, 2645, 1},
  {0x0FA83, 2646, 1},
  {0x0FA84, 2647, 1},
  {0x0FA85, 2648, 1},
  {0x0FA86, 2649, 1},
  {0x0FA87, 2650, 1},
  {0x0FA88, 2651, 1},
  {0x0FA89, 2652, 1},
  {0x0FA8A, 2653, 1},
  {0x0FA8B, 2654, 1},
  {0x0FA8C, 2655, 1},
  {0x0FA8D, 2656, 1},
  {0x0FA8E, 2657, 1},
  {0x0FA8F, 2658, 1},
  {0x0FA90, 2659, 1},
  {0x0FA91, 2660, 1},
  {0x0FA92, 2661, 1},
  {0x0FA93, 2662, 1},
  {0x0FA94, 2663, 1},
  {0x0FA95, 2664, 1},
  {0x0FA96, 2665, 1},
  {0x0FA97, 2666, 1},
  {0x0FA98, 2667, 1},
  {0x0FA99, 2668, 1},
  {0x0FA9A, 2669, 1},
  {0x0FA9B, 2670, 1},
  {0x0FA9C, 2671, 1},
  {0x0FA9D, 2672, 1},
  {0x0FA9E, 2673, 1},
  {0x0FA9F, 2674, 1},
  {0x0FAA0, 2675, 1},
  {0x0FAA1, 2676, 1},
  {0x0FAA2, 2677, 1},
  {0x0FAA3, 2678, 1},
  {0x0FAA4, 2679, 1},
  {0x0FAA5, 2680, 1},
  {0x0FAA6, 2681, 1},
  {0x0FAA7, 2682, 1},
  {0x0FAA8, 2683, 1},
  {0x0FAA9, 2684, 1},
  {0x0FAAA, 2685, 1},
  {0x0FAAB, 2686, 1},
  {0x0FAAC, 2687, 1},
  {0x0FAAD, 2688, 1},
  {0x0FAAE, 2689, 1},
  {0x0FAAF, 2690, 1},
  {0x0FAB0, 2691, 1},
  {0x0FAB1, 2692, 1},
  {0x0FAB2, 2693, 1},
  {0x0FAB3, 2694, 1},
  {0x0FAB4, 2695, 1},
  {0x0FAB5, 2696, 1},
  {0x0FAB6, 2697, 1},
  {0x0FAB7, 2698, 1},
  {0x0FAB8, 2699, 1},
  {0x0FAB9, 2700, 1},
  {0x0FABA, 2701, 1},
  {0x0FABB, 2702, 1},
  {0x0FABC, 2703, 1},
  {0x0FABD, 2704, 1},
  {0x0FABE, 2705, 1},
  {0x0FABF, 2706, 1},
  {0x0FAC0, 2707, 1},
  {0x0FAC1, 2708, 1},
  {0x0FAC2, 2709, 1},
  {0x0FAC3, 2710, 1},
  {0x0FAC4, 2711, 1},
  {0x0FAC5, 2712, 1},
  {0x0FAC6, 2713, 1},
  {0x0FAC7, 2714, 1},
  {0x0FAC8, 2715, 1},
  {0x0FAC9, 2716, 1},
  {0x0FACA, 2717, 1},
  {0x0FACB, 2718, 1},
  {0x0FACC, 2719, 1},
  {0x0FACD, 2720, 1},
  {0x0FACE, 2721, 1},
  {0x0FACF, 2722, 1},
  {0x0FAD0, 2723, 1},
  {0x0FAD1, 2724, 1},
  {0x0FAD2, 2725, 1},
  {0x0FAD3, 2726, 1},
  {0x0FAD4, 2727, 1},
  {0x0FAD5, 2728, 1},
  {0x0FAD6, 2729, 1},
  {0x0FAD7, 2730, 1},
  {0x0FAD8, 2731, 1},
  {0x0FAD9, 2732, 1},
  {0x0FB1D, 2733, 2},
  {0x0FB1F, 2735, 2},
  {0x0FB2A, 2737, 2},
  {0x0FB2B, 2739, 2},
  {0x0FB2C, 2741, 3},
  {0x0FB2D, 2744, 3},
  {0x0FB2E, 2747, 2},
  {0x0FB2F, 2749, 2},
  {0x0FB30, 2751, 2},
  {0x0FB31, 2753, 2},
  {0x0FB32, 2755, 2},
  {0x0FB33, 2757, 2},
  {0x0FB34, 2759, 2},
  {0x0FB35, 2761, 2},
  {0x0FB36, 2763, 2},
  {0x0FB38, 2765, 2},
  {0x0FB39, 2767, 2},
  {0x0FB3A, 2769, 2},
  {0x0FB3B, 2771, 2},
  {0x0FB3C, 2773, 2},
  {0x0FB3E, 2775, 2},
  {0x0FB40, 2777, 2},
  {0x0FB41, 2779, 2},
  {0x0FB43, 2781, 2},
  {0x0FB44, 2783, 2},
  {0x0FB46, 2785, 2},
  {0x0FB47, 2787, 2},
  {0x0FB48, 2789, 2},
  {0x0FB49, 2791, 2},
  {0x0FB4A, 2793, 2},
  {0x0FB4B, 2795, 2},
  {0x0FB4C, 2797, 2},
  {0x0FB4D, 2799, 2},
  {0x0FB4E, 2801, 2},
  {0x1109A, 2803, 2},
  {0x1109C, 2805, 2},
  {0x110AB, 2807, 2},
  {0x1112E, 2809, 2},
  {0x1112F, 2811, 2},
  {0x1134B, 2813, 2},
  {0x1134C, 2815, 2},
  {0x114BB, 2817, 2},
  {0x114BC, 2819, 2},
  {0x114BE, 2821, 2},
  {0x115BA, 2823, 2},
  {0x115BB, 2825, 2},
  {0x11938, 2827, 2},
  {0x1D15E, 2829, 2},
  {0x1D15F, 2831, 2},
  {0x1D160, 2833, 3},
  {0x1D161, 2836, 3},
  {0x1D162, 2839, 3},
  {0x1D163, 2842, 3},
  {0x1D164, 2845, 3},
  {0x1D1BB, 2848, 2},
  {0x1D1BC, 2850, 2},
  {0x1D1BD, 2852, 3},
  {0x1D1BE, 2855, 3},
  {0x1D1BF, 2858, 3},
  {0x1D1C0, 2861, 3},
  {0x2F800, 2864, 1},
  {0x2F801, 2865, 1},
  {0x2F802, 2866, 1},
  {0x2F803, 2867, 1},
  {0x2F804, 2868, 1},
  {0x2F805, 2869, 1},
  {0x2F806, 2870, 1},
  {0x2F807, 2871, 1},
  {0x2F808, 2872, 1},
  {0x2F809, 2873, 1},
  {0x2F80A, 2874, 1},
  {0x2F80B, 2875, 1},
  {0x2F80C, 2876, 1},
  {0x2F80D, 2877, 1},
  {0x2F80E, 2878, 1},
  {0x2F80F, 2879, 1},
  {0x2F810, 2880, 1},
  {0x2F811, 2881, 1},
  {0x2F812, 2882, 1},
  {0x2F813, 2883, 1},
  {0x2F814, 2884, 1},
  {0x2F815, 2885, 1},
  {0x2F816, 2886, 1},
  {0x2F817, 2887, 1},
  {0x2F818, 2888, 1},
  {0x2F819, 2889, 1},
  {0x2F81A, 2890, 1},
  {0x2F81B, 2891, 1},
  {0x2F81C, 2892, 1},
  {0x2F81D, 2893, 1},
  {0x2F81E, 2894, 1},
  {0x2F81F, 2895, 1},
  {0x2F820, 2896, 1},
  {0x2F821, 2897, 1},
  {0x2F822, 2898, 1},
  {0x2F823, 2899, 1},
  {0x2F824, 2900, 1},
  {0x2F825, 2901, 1},
  {0x2F826, 2902, 1},
  {0x2F827, 2903, 1},
  {0x2F828, 2904, 1},
  {0x2F829, 2905, 1},
  {0x2F82A, 2906, 1},
  {0x2F82B, 2907, 1},
  {0x2F82C, 2908, 1},
  {0x2F82D, 2909, 1},
  {0x2F82E, 2910, 1},
  {0x2F82F, 2911, 1},
  {0x2F830, 2912, 1},
  {0x2F831, 2913, 1},
  {0x2F832, 2914, 1},
  {0x2F833, 2915, 1},
  {0x2F834, 2916, 1},
  {0x2F835, 2917, 1},
  {0x2F836, 2918, 1},
  {0x2F837, 2919, 1},
  {0x2F838, 2920, 1},
  {0x2F839, 2921, 1},
  {0x2F83A, 2922, 1},
  {0x2F83B, 2923, 1},
  {0x2F83C, 2924, 1},
  {0x2F83D, 2925, 1},
  {0x2F83E, 2926, 1},
  {0x2F83F, 2927, 1},
  {0x2F840, 2928, 1},
  {0x2F841, 2929, 1},
  {0x2F842, 2930, 1},
  {0x2F843, 2931, 1},
  {0x2F844, 2932, 1},
  {0x2F845, 2933, 1},
  {0x2F846, 2934, 1},
  {0x2F847, 2935, 1},
  {0x2F848, 2936, 1},
  {0x2F849, 2937, 1},
  {0x2F84A, 2938, 1},
  {0x2F84B, 2939, 1},
  {0x2F84C, 2940, 1},
  {0x2F84D, 2941, 1},
  {0x2F84E, 2942, 1},
  {0x2F84F, 2943, 1},
  {0x2F850, 2944, 1},
  {0x2F851, 2945, 1},
  {0x2F852, 2946, 1},
  {0x2F853, 2947, 1},
  {0x2F854, 2948, 1},
  {0x2F855, 2949, 1},
  {0x2F856, 2950, 1},
  {0x2F857, 2951, 1},
  {0x2F858, 2952, 1},
  {0x2F859, 2953, 1},
  {0x2F85A, 2954, 1},
  {0x2F85B, 2955, 1},
  {0x2F85C, 2956, 1},
  {0x2F85D, 2957, 1},
  {0x2F85E, 2958, 1},
  {0x2F85F, 2959, 1},
  {0x2F860, 2960, 1},
  {0x2F861, 2961, 1},
  {0x2F862, 2962, 1},
  {0x2F863, 2963, 1},
  {0x2F864, 2964, 1},
  {0x2F865, 2965, 1},
  {0x2F866, 2966, 1},
  {0x2F867, 2967, 1},
  {0x2F868, 2968, 1},
  {0x2F869, 2969, 1},
  {0x2F86A, 2970, 1},
  {0x2F86B, 2971, 1},
  {0x2F86C, 2972, 1},
  {0x2F86D, 2973, 1},
  {0x2F86E, 2974, 1},
  {0x2F86F, 2975, 1},
  {0x2F870, 2976, 1},
  {0x2F871, 2977, 1},
  {0x2F872, 2978, 1},
  {0x2F873, 2979, 1},
  {0x2F874, 2980, 1},
  {0x2F875, 2981, 1},
  {0x2F876, 2982, 1},
  {0x2F877, 2983, 1},
  {0x2F878, 2984, 1},
  {0x2F879, 2985, 1},
  {0x2F87A, 2986, 1},
  {0x2F87B, 2987, 1},
  {0x2F87C, 2988, 1},
  {0x2F87D, 2989, 1},
  {0x2F87E, 2990, 1},
  {0x2F87F, 2991, 1},
  {0x2F880, 2992, 1},
  {0x2F881, 2993, 1},
  {0x2F882, 2994, 1},
  {0x2F883, 2995, 1},
  {0x2F884, 2996, 1},
  {0x2F885, 2997, 1},
  {0x2F886, 2998, 1},
  {0x2F887, 2999, 1},
  {0x2F888, 3000, 1},
  {0x2F889, 3001, 1},
  {0x2F88A, 3002, 1},
  {0x2F88B, 3003, 1},
  {0x2F88C, 3004, 1},
  {0x2F88D, 3005, 1},
  {0x2F88E, 3006, 1},
  {0x2F88F, 3007, 1},
  {0x2F890, 3008, 1},
  {0x2F891, 3009, 1},
  {0x2F892, 3010, 1},
  {0x2F893, 3011, 1},
  {0x2F894, 3012, 1},
  {0x2F895, 3013, 1},
  {0x2F896, 3014, 1},
  {0x2F897, 3015, 1},
  {0x2F898, 3016, 1},
  {0x2F899, 3017, 1},
  {0x2F89A, 3018, 1},
  {0x2F89B, 3019, 1},
  {0x2F89C, 3020, 1},
  {0x2F89D, 3021, 1},
  {0x2F89E, 3022, 1},
  {0x2F89F, 3023, 1},
  {0x2F8A0, 3024, 1},
  {0x2F8A1, 3025, 1},
  {0x2F8A2, 3026, 1},
  {0x2F8A3, 3027, 1},
  {0x2F8A4, 3028, 1},
  {0x2F8A5, 3029, 1},
  {0x2F8A6, 3030, 1},
  {0x2F8A7, 3031, 1},
  {0x2F8A8, 3032, 1},
  {0x2F8A9, 3033, 1},
  {0x2F8AA, 3034, 1},
  {0x2F8AB, 3035, 1},
  {0x2F8AC, 3036, 1},
  {0x2F8AD, 3037, 1},
  {0x2F8AE, 3038, 1},
  {0x2F8AF, 3039, 1},
  {0x2F8B0, 3040, 1},
  {0x2F8B1, 3041, 1},
  {0x2F8B2, 3042, 1},
  {0x2F8B3, 3043, 1},
  {0x2F8B4, 3044, 1},
  {0x2F8B5, 3045, 1},
  {0x2F8B6, 3046, 1},
  {0x2F8B7, 3047, 1},
  {0x2F8B8, 3048, 1},
  {0x2F8B9, 3049, 1},
  {0x2F8BA, 3050, 1},
  {0x2F8BB, 3051, 1},
  {0x2F8BC, 3052, 1},
  {0x2F8BD, 3053, 1},
  {0x2F8BE, 3054, 1},
  {0x2F8BF, 3055, 1},
  {0x2F8C0, 3056, 1},
  {0x2F8C1, 3057, 1},
  {0x2F8C2, 3058, 1},
  {0x2F8C3, 3059, 1},
  {0x2F8C4, 3060, 1},
  {0x2F8C5, 3061, 1},
  {0x2F8C6, 3062, 1},
  {0x2F8C7, 3063, 1},
  {0x2F8C8, 3064, 1},
  {0x2F8C9, 3065, 1},
  {0x2F8CA, 3066, 1},
  {0x2F8CB, 3067, 1},
  {0x2F8CC, 3068, 1},
  {0x2F8CD, 3069, 1},
  {0x2F8CE, 3070, 1},
  {0x2F8CF, 3071, 1},
  {0x2F8D0, 3072, 1},
  {0x2F8D1, 3073, 1},
  {0x2F8D2, 3074, 1},
  {0x2F8D3, 3075, 1},
  {0x2F8D4, 3076, 1},
  {0x2F8D5, 3077, 1},
  {0x2F8D6, 3078, 1},
  {0x2F8D7, 3079, 1},
  {0x2F8D8, 3080, 1},
  {0x2F8D9, 3081, 1},
  {0x2F8DA, 3082, 1},
  {0x2F8DB, 3083, 1},
  {0x2F8DC, 3084, 1},
  {0x2F8DD, 3085, 1},
  {0x2F8DE, 3086, 1},
  {0x2F8DF, 3087, 1},
  {0x2F8E0, 3088, 1},
  {0x2F8E1, 3089, 1},
  {0x2F8E2, 3090, 1},
  {0x2F8E3, 3091, 1},
  {0x2F8E4, 3092, 1},
  {0x2F8E5, 3093, 1},
  {0x2F8E6, 3094, 1},
  {0x2F8E7, 3095, 1},
  {0x2F8E8, 3096, 1},
  {0x2F8E9, 3097, 1},
  {0x2F8EA, 3098, 1},
  {0x2F8EB, 3099, 1},
  {0x2F8EC, 3100, 1},
  {0x2F8ED, 3101, 1},
  {0x2F8EE, 3102, 1},
  {0x2F8EF, 3103, 1},
  {0x2F8F0, 3104, 1},
  {0x2F8F1, 3105, 1},
  {0x2F8F2, 3106, 1},
  {0x2F8F3, 3107, 1},
  {0x2F8F4, 3108, 1},
  {0x2F8F5, 3109, 1},
  {0x2F8F6, 3110, 1},
  {0x2F8F7, 3111, 1},
  {0x2F8F8, 3112, 1},
  {0x2F8F9, 3113, 1},
  {0x2F8FA, 3114, 1},
  {0x2F8FB, 3115, 1},
  {0x2F8FC, 3116, 1},
  {0x2F8FD, 3117, 1},
  {0x2F8FE, 3118, 1},
  {0x2F8FF, 3119, 1},
  {0x2F900, 3120, 1},
  {0x2F901, 3121, 1},
  {0x2F902, 3122, 1},
  {0x2F903, 3123, 1},
  {0x2F904, 3124, 1},
  {0x2F905, 3125, 1},
  {0x2F906, 3126, 1},
  {0x2F907, 3127, 1},
  {0x2F908, 3128, 1},
  {0x2F909, 3129, 1},
  {0x2F90A, 3130, 1},
  {0x2F90B, 3131, 1},
  {0x2F90C, 3132, 1},
  {0x2F90D, 3133, 1},
  {0x2F90E, 3134, 1},
  {0x2F90F, 3135, 1},
  {0x2F910, 3136, 1},
  {0x2F911, 3137, 1},
  {0x2F912, 3138, 1},
  {0x2F913, 3139, 1},
  {0x2F914, 3140, 1},
  {0x2F915, 3141, 1},
  {0x2F916, 3142, 1},
  {0x2F917, 3143, 1},
  {0x2F918, 3144, 1},
  {0x2F919, 3145, 1},
  {0x2F91A, 3146, 1},
  {0x2F91B, 3147, 1},
  {0x2F91C, 3148, 1},
  {0x2F91D, 3149, 1},
  {0x2F91E, 3150, 1},
  {0x2F91F, 3151, 1},
  {0x2F920, 3152, 1},
  {0x2F921, 3153, 1},
  {0x2F922, 3154, 1},
  {0x2F923, 3155, 1},
  {0x2F924, 3156, 1},
  {0x2F925, 3157, 1},
  {0x2F926, 3158, 1},
  {0x2F927, 3159, 1},
  {0x2F928, 3160, 1},
  {0x2F929, 3161, 1},
  {0x2F92A, 3162, 1},
  {0x2F92B, 3163, 1},
  {0x2F92C, 3164, 1},
  {0x2F92D, 3165, 1},
  {0x2F92E, 3166, 1},
  {0x2F92F, 3167, 1},
  {0x2F930, 3168, 1},
  {0x2F931, 3169, 1},
  {0x2F932, 3170, 1},
  {0x2F933, 3171, 1},
  {0x2F934, 3172, 1},
  {0x2F935, 3173, 1},
  {0x2F936, 3174, 1},
  {0x2F937, 3175, 1},
  {0x2F938, 3176, 1},
  {0x2F939, 3177, 1},
  {0x2F93A, 3178, 1},
  {0x2F93B, 3179, 1},
  {0x2F93C, 3180, 1},
  {0x2F93D, 3181, 1},
  {0x2F93E, 3182, 1},
  {0x2F93F, 3183, 1},
  {0x2F940, 3184, 1},
  {0x2F941, 3185, 1},
  {0x2F942, 3186, 1},
  {0x2F943, 3187, 1},
  {0x2F944, 3188, 1},
  {0x2F945, 3189, 1},
  {0x2F946, 3190, 1},
  {0x2F947, 3191, 1},
  {0x2F948, 3192, 1},
  {0x2F949, 3193, 1},
  {0x2F94A, 3194, 1},
  {0x2F94B, 3195, 1},
  {0x2F94C, 3196, 1},
  {0x2F94D, 3197, 1},
  {0x2F94E, 3198, 1},
  {0x2F94F, 3199, 1},
  {0x2F950, 3200, 1},
  {0x2F951, 3201, 1},
  {0x2F952, 3202, 1},
  {0x2F953, 3203, 1},
  {0x2F954, 3204, 1},
  {0x2F955, 3205, 1},
  {0x2F956, 3206, 1},
  {0x2F957, 3207, 1},
  {0x2F958, 3208, 1},
  {0x2F959, 3209, 1},
  {0x2F95A, 3210, 1},
  {0x2F95B, 3211, 1},
  {0x2F95C, 3212, 1},
  {0x2F95D, 3213, 1},
  {0x2F95E, 3214, 1},
  {0x2F95F, 3215, 1},
  {0x2F960, 3216, 1},
  {0x2F961, 3217, 1},
  {0x2F962, 3218, 1},
  {0x2F963, 3219, 1},
  {0x2F964, 3220, 1},
  {0x2F965, 3221, 1},
  {0x2F966, 3222, 1},
  {0x2F967, 3223, 1},
  {0x2F968, 3224, 1},
  {0x2F969, 3225, 1},
  {0x2F96A, 3226, 1},
  {0x2F96B, 3227, 1},
  {0x2F96C, 3228, 1},
  {0x2F96D, 3229, 1},
  {0x2F96E, 3230, 1},
  {0x2F96F, 3231, 1},
  {0x2F970, 3232, 1},
  {0x2F971, 3233, 1},
  {0x2F972, 3234, 1},
  {0x2F973, 3235, 1},
  {0x2F974, 3236, 1},
  {0x2F975, 3237, 1},
  {0x2F976, 3238, 1},
  {0x2F977, 3239, 1},
  {0x2F978, 3240, 1},
  {0x2F979, 3241, 1},
  {0x2F97A, 3242, 1},
  {0x2F97B, 3243, 1},
  {0x2F97C, 3244, 1},
  {0x2F97D, 3245, 1},
  {0x2F97E, 3246, 1},
  {0x2F97F, 3247, 1},
  {0x2F980, 3248, 1},
  {0x2F981, 3249, 1},
  {0x2F982, 3250, 1},
  {0x2F983, 3251, 1},
  {0x2F984, 3252, 1},
  {0x2F985, 3253, 1},
  {0x2F986, 3254, 1},
  {0x2F987, 3255, 1},
  {0x2F988, 3256, 1},
  {0x2F989, 3257, 1},
  {0x2F98A, 3258, 1},
  {0x2F98B, 3259, 1},
  {0x2F98C, 3260, 1},
  {0x2F98D, 3261, 1},
  {0x2F98E, 3262, 1},
  {0x2F98F, 3263, 1},
  {0x2F990, 3264, 1},
  {0x2F991, 3265, 1},
  {0x2F992, 3266, 1},
  {0x2F993, 3267, 1},
  {0x2F994, 3268, 1},
  {0x2F995, 3269, 1},
  {0x2F996, 3270, 1},
  {0x2F997, 3271, 1},
  {0x2F998, 3272, 1},
  {0x2F999, 3273, 1},
  {0x2F99A, 3274, 1},
  {0x2F99B, 3275, 1},
  {0x2F99C, 3276, 1},
  {0x2F99D, 3277, 1},
  {0x2F99E, 3278, 1},
  {0x2F99F, 3279, 1},
  {0x2F9A0, 3280, 1},
  {0x2F9A1, 3281, 1},
  {0x2F9A2, 3282, 1},
  {0x2F9A3, 3283, 1},
  {0x2F9A4, 3284, 1},
  {0x2F9A5, 3285, 1},
  {0x2F9A6, 3286, 1},
  {0x2F9A7, 3287, 1},
  {0x2F9A8, 3288, 1},
  {0x2F9A9, 3289, 1},
  {0x2F9AA, 3290, 1},
  {0x2F9AB, 3291, 1},
  {0x2F9AC, 3292, 1},
  {0x2F9AD, 3293, 1},
  {0x2F9AE, 3294, 1},
  {0x2F9AF, 3295, 1},
  {0x2F9B0, 3296, 1},
  {0x2F9B1, 3297, 1},
  {0x2F9B2, 3298, 1},
  {0x2F9B3, 3299, 1},
  {0x2F9B4, 3300, 1},
  {0x2F9B5, 3301, 1},
  {0x2F9B6, 3302, 1},
  {0x2F9B7, 3303, 1},
  {0x2F9B8, 3304, 1},
  {0x2F9B9, 3305, 1},
  {0x2F9BA, 3306, 1},
  {0x2F9BB, 3307, 1},
  {0x2F9BC, 3308, 1},
  {0x2F9BD, 3309, 1},
  {0x2F9BE, 3310, 1},
  {0x2F9BF, 3311, 1},
  {0x2F9C0, 3312, 1},
  {0x2F9C1, 3313, 1},
  {0x2F9C2, 3314, 1},
  {0x2F9C3, 3315, 1},
  {0x2F9C4, 3316, 1},
  {0x2F9C5, 3317, 1},
  {0x2F9C6, 3318, 1},
  {0x2F9C7, 3319, 1},
  {0x2F9C8, 3320, 1},
  {0x2F9C9, 3321, 1},
  {0x2F9CA, 3322, 1},
  {0x2F9CB, 3323, 1},
  {0x2F9CC, 3324, 1},
  {0x2F9CD, 3325, 1},
  {0x2F9CE, 3326, 1},
  {0x2F9CF, 3327, 1},
  {0x2F9D0, 3328, 1},
  {0x2F9D1, 3329, 1},
  {0x2F9D2, 3330, 1},
  {0x2F9D3, 3331, 1},
  {0x2F9D4, 3332, 1},
  {0x2F9D5, 3333, 1},
  {0x2F9D6, 3334, 1},
  {0x2F9D7, 3335, 1},
  {0x2F9D8, 3336, 1},
  {0x2F9D9, 3337, 1},
  {0x2F9DA, 3338, 1},
  {0x2F9DB, 3339, 1},
  {0x2F9DC, 3340, 1},
  {0x2F9DD, 3341, 1},
  {0x2F9DE, 3342, 1},
  {0x2F9DF, 3343, 1},
  {0x2F9E0, 3344, 1},
  {0x2F9E1, 3345, 1},
  {0x2F9E2, 3346, 1},
  {0x2F9E3, 3347, 1},
  {0x2F9E4, 3348, 1},
  {0x2F9E5, 3349, 1},
  {0x2F9E6, 3350, 1},
  {0x2F9E7, 3351, 1},
  {0x2F9E8, 3352, 1},
  {0x2F9E9, 3353, 1},
  {0x2F9EA, 3354, 1},
  {0x2F9EB, 3355, 1},
  {0x2F9EC, 3356, 1},
  {0x2F9ED, 3357, 1},
  {0x2F9EE, 3358, 1},
  {0x2F9EF, 3359, 1},
  {0x2F9F0, 3360, 1},
  {0x2F9F1, 3361, 1},
  {0x2F9F2, 3362, 1},
  {0x2F9F3, 3363, 1},
  {0x2F9F4, 3364, 1},
  {0x2F9F5, 3365, 1},
  {0x2F9F6, 3366, 1},
  {0x2F9F7, 3367, 1},
  {0x2F9F8, 3368, 1},
  {0x2F9F9, 3369, 1},
  {0x2F9FA, 3370, 1},
  {0x2F9FB, 3371, 1},
  {0x2F9FC, 3372, 1},
  {0x2F9FD, 3373, 1},
  {0x2F9FE, 3374, 1},
  {0x2F9FF, 3375, 1},
  {0x2FA00, 3376, 1},
  {0x2FA01, 3377, 1},
  {0x2FA02, 3378, 1},
  {0x2FA03, 3379, 1},
  {0x2FA04, 3380, 1},
  {0x2FA05, 3381, 1},
  {0x2FA06, 3382, 1},
  {0x2FA07, 3383, 1},
  {0x2FA08, 3384, 1},
  {0x2FA09, 3385, 1},
  {0x2FA0A, 3386, 1},
  {0x2FA0B, 3387, 1},
  {0x2FA0C, 3388, 1},
  {0x2FA0D, 3389, 1},
  {0x2FA0E, 3390, 1},
  {0x2FA0F, 3391, 1},
  {0x2FA10, 3392, 1},
  {0x2FA11, 3393, 1},
  {0x2FA12, 3394, 1},
  {0x2FA13, 3395, 1},
  {0x2FA14, 3396, 1},
  {0x2FA15, 3397, 1},
  {0x2FA16, 3398, 1},
  {0x2FA17, 3399, 1},
  {0x2FA18, 3400, 1},
  {0x2FA19, 3401, 1},
  {0x2FA1A, 3402, 1},
  {0x2FA1B, 3403, 1},
  {0x2FA1C, 3404, 1},
  {0x2FA1D, 3405, 1},
};
const std::size_t decomposition_count = 2061;

const CombiningClassEntry combining_class_entries[872] = {
  {0x00300, 230},
  {0x00301, 230},
  {0x00302, 230},
  {0x00303, 230},
  {0x00304, 230},
  {0x00305, 230},
  {0x00306, 230},
  {0x00307, 230},
  {0x00308, 230},
  {0x00309, 230},
  {0x0030A, 230},
  {0x0030B, 230},
  {0x0030C, 230},
  {0x0030D, 230},
  {0x0030E, 230},
  {0x0030F, 230},
  {0x00310, 230},
  {0x00311, 230},
  {0x00312, 230},
  {0x00313, 230},
  {0x00314, 230},
  {0x00315, 232},
  {0x00316, 220},
  {0x00317, 220},
  {0x00318, 220},
  {0x00319, 220},
  {0x0031A, 232},
  {0x0031B, 216},
  {0x0031C, 220},
  {0x0031D, 220},
  {0x0031E, 220},
  {0x0031F, 220},
  {0x00320, 220},
  {0x00321, 202},
  {0x00322, 202},
  {0x00323, 220},
  {0x00324, 220},
  {0x00325, 220},
  {0x00326, 220},
  {0x00327, 202},
  {0x00328, 202},
  {0x00329, 220},
  {0x0032A, 220},
  {0x0032B, 220},
  {0x0032C, 220},
  {0x0032D, 220},
  {0x0032E, 220},
  {0x0032F, 220},
  {0x00330, 220},
  {0x00331, 220},
  {0x00332, 220},
  {0x00333, 220},
  {0x00334, 1},
  {0x00335, 1},
  {0x00336, 1},
  {0x00337, 1},
  {0x00338, 1},
  {0x00339, 220},
  {0x0033A, 220},
  {0x0033B, 220},
  {0x0033C, 220},
  {0x0033D, 230},
  {0x0033E, 230},
  {0x0033F, 230},
  {0x00340, 230},
  {0x00341, 230},
  {0x00342, 230},
  {0x00343, 230},
  {0x00344, 230},
  {0x00345, 240},
  {0x00346, 230},
  {0x00347, 220},
  {0x00348, 220},
  {0x00349, 220},
  {0x0034A, 230},
  {0x0034B, 230},
  {0x0034C, 230},
  {0x0034D, 220},
  {0x0034E, 220},
  {0x00350, 230},
  {0x00351, 230},
  {0x00352, 230},
  {0x00353, 220},
  {0x00354, 220},
  {0x00355, 220},
  {0x00356, 220},
  {0x00357, 230},
  {0x00358, 232},
  {0x00359, 220},
  {0x0035A, 220},
  {0x0035B, 230},
  {0x0035C, 233},
  {0x0035D, 234},
  {0x0035E, 234},
  {0x0035F, 233},
  {0x00360, 234},
  {0x00361, 234},
  {0x00362, 233},
  {0x00363, 230},
  {0x00364, 230},
  {0x00365, 230},
  {0x00366, 230},
  {0x00367, 230},
  {0x00368, 230},
  {0x00369, 230},
  {0x0036A, 230},
  {0x0036B, 230},
  {0x0036C, 230},
  {0x0036D, 230},
  {0x0036E, 230},
  {0x0036F, 230},
  {0x00483, 230},
  {0x00484, 230},
  {0x00485, 230},
  {0x00486, 230},
  {0x00487, 230},
  {0x00591, 220},
  {0x00592, 230},
  {0x00593, 230},
  {0x00594, 230},
  {0x00595, 230},
  {0x00596, 220},
  {0x00597, 230},
  {0x00598, 230},
  {0x00599, 230},
  {0x0059A, 222},
  {0x0059B, 220},
  {0x0059C, 230},
  {0x0059D, 230},
  {0x0059E, 230},
  {0x0059F, 230},
  {0x005A0, 230},
  {0x005A1, 230},
  {0x005A2, 220},
  {0x005A3, 220},
  {0x005A4, 220},
  {0x005A5, 220},
  {0x005A6, 220},
  {0x005A7, 220},
  {0x005A8, 230},
  {0x005A9, 230},
  {0x005AA, 220},
  {0x005AB, 230},
  {0x005AC, 230},
  {0x005AD, 222},
  {0x005AE, 228},
  {0x005AF, 230},
  {0x005B0, 10},
  {0x005B1, 11},
  {0x005B2, 12},
  {0x005B3, 13},
  {0x005B4, 14},
  {0x005B5, 15},
  {0x005B6, 16},
  {0x005B7, 17},
  {0x005B8, 18},
  {0x005B9, 19},
  {0x005BA, 19},
  {0x005BB, 20},
  {0x005BC, 21},
  {0x005BD, 22},
  {0x005BF, 23},
  {0x005C1, 24},
  {0x005C2, 25},
  {0x005C4, 230},
  {0x005C5, 220},
  {0x005C7, 18},
  {0x00610, 230},
  {0x00611, 230},
  {0x00612, 230},
  {0x00613, 230},
  {0x00614, 230},
  {0x00615, 230},
  {0x00616, 230},
  {0x00617, 230},
  {0x00618, 30},
  {0x00619, 31},
  {0x0061A, 32},
  {0x0064B, 27},
  {0x0064C, 28},
  {0x0064D, 29},
  {0x0064E, 30},
  {0x0064F, 31},
  {0x00650, 32},
  {0x00651, 33},
  {0x00652, 34},
  {0x00653, 230},
  {0x00654, 230},
  {0x00655, 220},
  {0x00656, 220},
  {0x00657, 230},
  {0x00658, 230},
  {0x00659, 230},
  {0x0065A, 230},
  {0x0065B, 230},
  {0x0065C, 220},
  {0x0065D, 230},
  {0x0065E, 230},
  {0x0065F, 220},
  {0x00670, 35},
  {0x006D6, 230},
  {0x006D7, 230},
  {0x006D8, 230},
  {0x006D9, 230},
  {0x006DA, 230},
  {0x006DB, 230},
  {0x006DC, 230},
  {0x006DF, 230},
  {0x006E0, 230},
  {0x006E1, 230},
  {0x006E2, 230},
  {0x006E3, 220},
  {0x006E4, 230},
  {0x006E7, 230},
  {0x006E8, 230},
  {0x006EA, 220},
  {0x006EB, 230},
  {0x006EC, 230},
  {0x006ED, 220},
  {0x00711, 36},
  {0x00730, 230},
  {0x00731, 220},
  {0x00732, 230},
  {0x00733, 230},
  {0x00734, 220},
  {0x00735, 230},
  {0x00736, 230},
  {0x00737, 220},
  {0x00738, 220},
  {0x00739, 220},
  {0x0073A, 230},
  {0x0073B, 220},
  {0x0073C, 220},
  {0x0073D, 230},
  {0x0073E, 220},
  {0x0073F, 230},
  {0x00740, 230},
  {0x00741, 230},
  {0x00742, 220},
  {0x00743, 230},
  {0x00744, 220},
  {0x00745, 230},
  {0x00746, 220},
  {0x00747, 230},
  {0x00748, 220},
  {0x00749, 230},
  {0x0074A, 230},
  {0x007EB, 230},
  {0x007EC, 230},
  {0x007ED, 230},
  {0x007EE, 230},
  {0x007EF, 230},
  {0x007F0, 230},
  {0x007F1, 230},
  {0x007F2, 220},
  {0x007F3, 230},
  {0x007FD, 220},
  {0x00816, 230},
  {0x00817, 230},
  {0x00818, 230},
  {0x00819, 230},
  {0x0081B, 230},
  {0x0081C, 230},
  {0x0081D, 230},
  {0x0081E, 230},
  {0x0081F, 230},
  {0x00820, 230},
  {0x00821, 230},
  {0x00822, 230},
  {0x00823, 230},
  {0x00825, 230},
  {0x00826, 230},
  {0x00827, 230},
  {0x00829, 230},
  {0x0082A, 230},
  {0x0082B, 230},
  {0x0082C, 230},
  {0x0082D, 230},
  {0x00859, 220},
  {0x0085A, 220},
  {0x0085B, 220},
  {0x008D3, 220},
  {0x008D4, 230},
  {0x008D5, 230},
  {0x008D6, 230},
  {0x008D7, 230},
  {0x008D8, 230},
  {0x008D9, 230},
  {0x008DA, 230},
  {0x008DB, 230},
  {0x008DC, 230},
  {0x008DD, 230},
  {0x008DE, 230},
  {0x008DF, 230},
  {0x008E0, 230},
  {0x008E1, 230},
  {0x008E3, 220},
  {0x008E4, 230},
  {0x008E5, 230},
  {0x008E6, 220},
  {0x008E7, 230},
  {0x008E8, 230},
  {0x008E9, 220},
  {0x008EA, 230},
  {0x008EB, 230},
  {0x008EC, 230},
  {0x008ED, 220},
  {0x008EE, 220},
  {0x008EF, 220},
  {0x008F0, 27},
  {0x008F1, 28},
  {0x008F2, 29},
  {0x008F3, 230},
  {0x008F4, 230},
  {0x008F5, 230},
  {0x008F6, 220},
  {0x008F7, 230},
  {0x008F8, 230},
  {0x008F9, 220},
  {0x008FA, 220},
  {0x008FB, 230},
  {0x008FC, 230},
  {0x008FD, 230},
  {0x008FE, 230},
  {0x008FF, 230},
  {0x0093C, 7},
  {0x0094D, 9},
  {0x00951, 230},
  {0x00952, 220},
  {0x00953, 230},
  {0x00954, 230},
  {0x009BC, 7},
  {0x009CD, 9},
  {0x009FE, 230},
  {0x00A3C, 7},
  {0x00A4D, 9},
  {0x00ABC, 7},
  {0x00ACD, 9},
  {0x00B3C, 7},
  {0x00B4D, 9},
  {0x00BCD, 9},
  {0x00C4D, 9},
  {0x00C55, 84},
  {0x00C56, 91},
  {0x00CBC, 7},
  {0x00CCD, 9},
  {0x00D3B, 9},
  {0x00D3C, 9},
  {0x00D4D, 9},
  {0x00DCA, 9},
  {0x00E38, 103},
  {0x00E39, 103},
  {0x00E3A, 9},
  {0x00E48, 107},
  {0x00E49, 107},
  {0x00E4A, 107},
  {0x00E4B, 107},
  {0x00EB8, 118},
  {0x00EB9, 118},
  {0x00EBA, 9},
  {0x00EC8, 122},
  {0x00EC9, 122},
  {0x00ECA, 122},
  {0x00ECB, 122},
  {0x00F18, 220},
  {0x00F19, 220},
  {0x00F35, 220},
  {0x00F37, 220},
  {0x00F39, 216},
  {0x00F71, 129},
  {0x00F72, 130},
  {0x00F74, 132},
  {0x00F7A, 130},
  {0x00F7B, 130},
  {0x00F7C, 130},
  {0x00F7D, 130},
  {0x00F80, 130},
  {0x00F82, 230},
  {0x00F83, 230},
  {0x00F84, 9},
  {0x00F86, 230},
  {0x00F87, 230},
  {0x00FC6, 220},
  {0x01037, 7},
  {0x01039, 9},
  {0x0103A, 9},
  {0x0108D, 220},
  {0x0135D, 230},
  {0x0135E, 230},
  {0x0135F, 230},
  {0x01714, 9},
  {0x01734, 9},
  {0x017D2, 9},
  {0x017DD, 230},
  {0x018A9, 228},
  {0x01939, 222},
  {0x0193A, 230},
  {0x0193B, 220},
  {0x01A17, 230},
  {0x01A18, 220},
  {0x01A60, 9},
  {0x01A75, 230},
  {0x01A76, 230},
  {0x01A77, 230},
  {0x01A78, 230},
  {0x01A79, 230},
  {0x01A7A, 230},
  {0x01A7B, 230},
  {0x01A7C, 230},
  {0x01A7F, 220},
  {0x01AB0, 230},
  {0x01AB1, 230},
  {0x01AB2, 230},
  {0x01AB3, 230},
  {0x01AB4, 230},
  {0x01AB5, 220},
  {0x01AB6, 220},
  {0x01AB7, 220},
  {0x01AB8, 220},
  {0x01AB9, 220},
  {0x01ABA, 220},
  {0x01ABB, 230},
  {0x01ABC, 230},
  {0x01ABD, 220},
  {0x01ABF, 220},
  {0x01AC0, 220},
  {0x01B34, 7},
  {0x01B44, 9},
  {0x01B6B, 230},
  {0x01B6C, 220},
  {0x01B6D, 230},
  {0x01B6E, 230},
  {0x01B6F, 230},
  {0x01B70, 230},
  {0x01B71, 230},
  {0x01B72, 230},
  {0x01B73, 230},
  {0x01BAA, 9},
  {0x01BAB, 9},
  {0x01BE6, 7},
  {0x01BF2, 9},
  {0x01BF3, 9},
  {0x01C37, 7},
  {0x01CD0, 230},
  {0x01CD1, 230},
  {0x01CD2, 230},
  {0x01CD4, 1},
  {0x01CD5, 220},
  {0x01CD6, 220},
  {0x01CD7, 220},
  {0x01CD8, 220},
  {0x01CD9, 220},
  {0x01CDA, 230},
  {0x01CDB, 230},
  {0x01CDC, 220},
  {0x01CDD, 220},
  {0x01CDE, 220},
  {0x01CDF, 220},
  {0x01CE0, 230},
  {0x01CE2, 1},
  {0x01CE3, 1},
  {0x01CE4, 1},
  {0x01CE5, 1},
  {0x01CE6, 1},
  {0x01CE7, 1},
  {0x01CE8, 1},
  {0x01CED, 220},
  {0x01CF4, 230},
  {0x01CF8, 230},
  {0x01CF9, 230},
  {0x01DC0, 230},
  {0x01DC1, 230},
  {0x01DC2, 220},
  {0x01DC3, 230},
  {0x01DC4, 230},
  {0x01DC5, 230},
  {0x01DC6, 230},
  {0x01DC7, 230},
  {0x01DC8, 230},
  {0x01DC9, 230},
  {0x01DCA, 220},
  {0x01DCB, 230},
  {0x01DCC, 230},
  {0x01DCD, 234},
  {0x01DCE, 214},
  {0x01DCF, 220},
  {0x01DD0, 202},
  {0x01DD1, 230},
  {0x01DD2, 230},
  {0x01DD3, 230},
  {0x01DD4, 230},
  {0x01DD5, 230},
  {0x01DD6, 230},
  {0x01DD7, 230},
  {0x01DD8, 230},
  {0x01DD9, 230},
  {0x01DDA, 230},
  {0x01DDB, 230},
  {0x01DDC, 230},
  {0x01DDD, 230},
  {0x01DDE, 230},
  {0x01DDF, 230},
  {0x01DE0, 230},
  {0x01DE1, 230},
  {0x01DE2, 230},
  {0x01DE3, 230},
  {0x01DE4, 230},
  {0x01DE5, 230},
  {0x01DE6, 230},
  {0x01DE7, 230},
  {0x01DE8, 230},
  {0x01DE9, 230},
  {0x01DEA, 230},
  {0x01DEB, 230},
  {0x01DEC, 230},
  {0x01DED, 230},
  {0x01DEE, 230},
  {0x01DEF, 230},
  {0x01DF0, 230},
  {0x01DF1, 230},
  {0x01DF2, 230},
  {0x01DF3, 230},
  {0x01DF4, 230},
  {0x01DF5, 230},
  {0x01DF6, 232},
  {0x01DF7, 228},
  {0x01DF8, 228},
  {0x01DF9, 220},
  {0x01DFB, 230},
  {0x01DFC, 233},
  {0x01DFD, 220},
  {0x01DFE, 230},
  {0x01DFF, 220},
  {0x020D0, 230},
  {0x020D1, 230},
  {0x020D2, 1},
  {0x020D3, 1},
  {0x020D4, 230},
  {0x020D5, 230},
  {0x020D6, 230},
  {0x020D7, 230},
  {0x020D8, 1},
  {0x020D9, 1},
  {0x020DA, 1},
  {0x020DB, 230},
  {0x020DC, 230},
  {0x020E1, 230},
  {0x020E5, 1},
  {0x020E6, 1},
  {0x020E7, 230},
  {0x020E8, 220},
  {0x020E9, 230},
  {0x020EA, 1},
  {0x020EB, 1},
  {0x020EC, 220},
  {0x020ED, 220},
  {0x020EE, 220},
  {0x020EF, 220},
  {0x020F0, 230},
  {0x02CEF, 230},
  {0x02CF0, 230},
  {0x02CF1, 230},
  {0x02D7F, 9},
  {0x02DE0, 230},
  {0x02DE1, 230},
  {0x02DE2, 230},
  {0x02DE3, 230},
  {0x02DE4, 230},
  {0x02DE5, 230},
  {0x02DE6, 230},
  {0x02DE7, 230},
  {0x02DE8, 230},
  {0x02DE9, 230},
  {0x02DEA, 230},
  {0x02DEB, 230},
  {0x02DEC, 230},
  {0x02DED, 230},
  {0x02DEE, 230},
  {0x02DEF, 230},
  {0x02DF0, 230},
  {0x02DF1, 230},
  {0x02DF2, 230},
  {0x02DF3, 230},
  {0x02DF4, 230},
  {0x02DF5, 230},
  {0x02DF6, 230},
  {0x02DF7, 230},
  {0x02DF8, 230},
  {0x02DF9, 230},
  {0x02DFA, 230},
  {0x02DFB, 230},
  {0x02DFC, 230},
  {0x02DFD, 230},
  {0x02DFE, 230},
  {0x02DFF, 230},
  {0x0302A, 218},
  {0x0302B, 228},
  {0x0302C, 232},
  {0x0302D, 222},
  {0x0302E, 224},
  {0x0302F, 224},
  {0x03099, 8},
  {0x0309A, 8},
  {0x0A66F, 230},
  {0x0A674, 230},
  {0x0A675, 230},
  {0x0A676, 230},
  {0x0A677, 230},
  {0x0A678, 230},
  {0x0A679, 230},
  {0x0A67A, 230},
  {0x0A67B, 230},
  {0x0A67C, 230},
  {0x0A67D, 230},
  {0x0A69E, 230},
  {0x0A69F, 230},
  {0x0A6F0, 230},
  {0x0A6F1, 230},
  {0x0A806, 9},
  {0x0A82C, 9},
  {0x0A8C4, 9},
  {0x0A8E0, 230},
  {0x0A8E1, 230},
  {0x0A8E2, 230},
  {0x0A8E3, 230},
  {0x0A8E4, 230},
  {0x0A8E5, 230},
  {0x0A8E6, 230},
  {0x0A8E7, 230},
  {0x0A8E8, 230},
  {0x0A8E9, 230},
  {0x0A8EA, 230},
  {0x0A8EB, 230},
  {0x0A8EC, 230},
  {0x0A8ED, 230},
  {0x0A8EE, 230},
  {0x0A8EF, 230},
  {0x0A8F0, 230},
  {0x0A8F1, 230},
  {0x0A92B, 220},
  {0x0A92C, 220},
  {0x0A92D, 220},
  {0x0A953, 9},
  {0x0A9B3, 7},
  {0x0A9C0, 9},
  {0x0AAB0, 230},
  {0x0AAB2, 230},
  {0x0AAB3, 230},
  {0x0AAB4, 220},
  {0x0AAB7, 230},
  {0x0AAB8, 230},
  {0x0AABE, 230},
  {0x0AABF, 230},
  {0x0AAC1, 230},
  {0x0AAF6, 9},
  {0x0ABED, 9},
  {0x0FB1E, 26},
  {0x0FE20, 230},
  {0x0FE21, 230},
  {0x0FE22, 230},
  {0x0FE23, 230},
  {0x0FE24, 230},
  {0x0FE25, 230},
  {0x0FE26, 230},
  {0x0FE27, 220},
  {0x0FE28, 220},
  {0x0FE29, 220},
  {0x0FE2A, 220},
  {0x0FE2B, 220},
  {0x0FE2C, 220},
  {0x0FE2D, 220},
  {0x0FE2E, 230},
  {0x0FE2F, 230},
  {0x101FD, 220},
  {0x102E0, 220},
  {0x10376, 230},
  {0x10377, 230},
  {0x10378, 230},
  {0x10379, 230},
  {0x1037A, 230},
  {0x10A0D, 220},
  {0x10A0F, 230},
  {0x10A38, 230},
  {0x10A39, 1},
  {0x10A3A, 220},
  {0x10A3F, 9},
  {0x10AE5, 230},
  {0x10AE6, 220},
  {0x10D24, 230},
  {0x10D25, 230},
  {0x10D26, 230},
  {0x10D27, 230},
  {0x10EAB, 230},
  {0x10EAC, 230},
  {0x10F46, 220},
  {0x10F47, 220},
  {0x10F48, 230},
  {0x10F49, 230},
  {0x10F4A, 230},
  {0x10F4B, 220},
  {0x10F4C, 230},
  {0x10F4D, 220},
  {0x10F4E, 220},
  {0x10F4F, 220},
  {0x10F50, 220},
  {0x11046, 9},
  {0x1107F, 9},
  {0x110B9, 9},
  {0x110BA, 7},
  {0x11100, 230},
  {0x11101, 230},
  {0x11102, 230},
  {0x11133, 9},
  {0x11134, 9},
  {0x11173, 7},
  {0x111C0, 9},
  {0x111CA, 7},
  {0x11235, 9},
  {0x11236, 7},
  {0x112E9, 7},
  {0x112EA, 9},
  {0x1133B, 7},
  {0x1133C, 7},
  {0x1134D, 9},
  {0x11366, 230},
  {0x11367, 230},
  {0x11368, 230},
  {0x11369, 230},
  {0x1136A, 230},
  {0x1136B, 230},
  {0x1136C, 230},
  {0x11370, 230},
  {0x11371, 230},
  {0x11372, 230},
  {0x11373, 230},
  {0x11374, 230},
  {0x11442, 9},
  {0x11446, 7},
  {0x1145E, 230},
  {0x114C2, 9},
  {0x114C3, 7},
  {0x115BF, 9},
  {0x115C0, 7},
  {0x1163F, 9},
  {0x116B6, 9},
  {0x116B7, 7},
  {0x1172B, 9},
  {0x11839, 9},
  {0x1183A, 7},
  {0x1193D, 9},
  {0x1193E, 9},
  {0x11943, 7},
  {0x119E0, 9},
  {0x11A34, 9},
  {0x11A47, 9},
  {0x11A99, 9},
  {0x11C3F, 9},
  {0x11D42, 7},
  {0x11D44, 9},
  {0x11D45, 9},
  {0x11D97, 9},
  {0x16AF0, 1},
  {0x16AF1, 1},
  {0x16AF2, 1},
  {0x16AF3, 1},
  {0x16AF4, 1},
  {0x16B30, 230},
  {0x16B31, 230},
  {0x16B32, 230},
  {0x16B33, 230},
  {0x16B34, 230},
  {0x16B35, 230},
  {0x16B36, 230},
  {0x16FF0, 6},
  {0x16FF1, 6},
  {0x1BC9E, 1},
  {0x1D165, 216},
  {0x1D166, 216},
  {0x1D167, 1},
  {0x1D168, 1},
  {0x1D169, 1},
  {0x1D16D, 226},
  {0x1D16E, 216},
  {0x1D16F, 216},
  {0x1D170, 216},
  {0x1D171, 216},
  {0x1D172, 216},
  {0x1D17B, 220},
  {0x1D17C, 220},
  {0x1D17D, 220},
  {0x1D17E, 220},
  {0x1D17F, 220},
  {0x1D180, 220},
  {0x1D181, 220},
  {0x1D182, 220},
  {0x1D185, 230},
  {0x1D186, 230},
  {0x1D187, 230},
  {0x1D188, 230},
  {0x1D189, 230},
  {0x1D18A, 220},
  {0x1D18B, 220},
  {0x1D1AA, 230},
  {0x1D1AB, 230},
  {0x1D1AC, 230},
  {0x1D1AD, 230},
  {0x1D242, 230},
  {0x1D243, 230},
  {0x1D244, 230},
  {0x1E000, 230},
  {0x1E001, 230},
  {0x1E002, 230},
  {0x1E003, 230},
  {0x1E004, 230},
  {0x1E005, 230},
  {0x1E006, 230},
  {0x1E008, 230},
  {0x1E009, 230},
  {0x1E00A, 230},
  {0x1E00B, 230},
  {0x1E00C, 230},
  {0x1E00D, 230},
  {0x1E00E, 230},
  {0x1E00F, 230},
  {0x1E010, 230},
  {0x1E011, 230},
  {0x1E012, 230},
  {0x1E013, 230},
  {0x1E014, 230},
  {0x1E015, 230},
  {0x1E016, 230},
  {0x1E017, 230},
  {0x1E018, 230},
  {0x1E01B, 230},
  {0x1E01C, 230},
  {0x1E01D, 230},
  {0x1E01E, 230},
  {0x1E01F, 230},
  {0x1E020, 230},
  {0x1E021, 230},
  {0x1E023, 230},
  {0x1E024, 230},
  {0x1E026, 230},
  {0x1E027, 230},
  {0x1E028, 230},
  {0x1E029, 230},
  {0x1E02A, 230},
  {0x1E130, 230},
  {0x1E131, 230},
  {0x1E132, 230},
  {0x1E133, 230},
  {0x1E134, 230},
  {0x1E135, 230},
  {0x1E136, 230},
  {0x1E2EC, 230},
  {0x1E2ED, 230},
  {0x1E2EE, 230},
  {0x1E2EF, 230},
  {0x1E8D0, 220},
  {0x1E8D1, 220},
  {0x1E8D2, 220},
  {0x1E8D3, 220},
  {0x1E8D4, 220},
  {0x1E8D5, 220},
  {0x1E8D6, 220},
  {0x1E944, 230},
  {0x1E945, 230},
  {0x1E946, 230},
  {0x1E947, 230},
  {0x1E948, 230},
  {0x1E949, 230},
  {0x1E94A, 7},
};
const std::size_t combining_class_count = 872;

const CompositionEntry composition_entries[941] = {
  {0x0003C, 0x00338, 0x0226E},
  {0x0003D, 0x00338, 0x02260},
  {0x0003E, 0x00338, 0x0226F},
  {0x00041, 0x00300, 0x000C0},
  {0x00041, 0x00301, 0x000C1},
  {0x00041, 0x00302, 0x000C2},
  {0x00041, 0x00303, 0x000C3},
  {0x00041, 0x00304, 0x00100},
  {0x00041, 0x00306, 0x00102},
  {0x00041, 0x00307, 0x00226},
  {0x00041, 0x00308, 0x000C4},
  {0x00041, 0x00309, 0x01EA2},
  {0x00041, 0x0030A, 0x000C5},
  {0x00041, 0x0030C, 0x001CD},
  {0x00041, 0x0030F, 0x00200},
  {0x00041, 0x00311, 0x00202},
  {0x00041, 0x00323, 0x01EA0},
  {0x00041, 0x00325, 0x01E00},
  {0x00041, 0x00328, 0x00104},
  {0x00042, 0x00307, 0x01E02},
  {0x00042, 0x00323, 0x01E04},
  {0x00042, 0x00331, 0x01E06},
  {0x00043, 0x00301, 0x00106},
  {0x00043, 0x00302, 0x00108},
  {0x00043, 0x00307, 0x0010A},
  {0x00043, 0x0030C, 0x0010C},
  {0x00043, 0x00327, 0x000C7},
  {0x00044, 0x00307, 0x01E0A},
  {0x00044, 0x0030C, 0x0010E},
  {0x00044, 0x00323, 0x01E0C},
  {0x00044, 0x00327, 0x01E10},
  {0x00044, 0x0032D, 0x01E12},
  {0x00044, 0x00331, 0x01E0E},
  {0x00045, 0x00300, 0x000C8},
  {0x00045, 0x00301, 0x000C9},
  {0x00045, 0x00302, 0x000CA},
  {0x00045, 0x00303, 0x01EBC},
  {0x00045, 0x00304, 0x00112},
  {0x00045, 0x00306, 0x00114},
  {0x00045, 0x00307, 0x00116},
  {0x00045, 0x00308, 0x000CB},
  {0x00045, 0x00309, 0x01EBA},
  {0x00045, 0x0030C, 0x0011A},
  {0x00045, 0x0030F, 0x00204},
  {0x00045, 0x00311, 0x00206},
  {0x00045, 0x00323, 0x01EB8},
  {0x00045, 0x00327, 0x00228},
  {0x00045, 0x00328, 0x00118},
  {0x00045, 0x0032D, 0x01E18},
  {0x00045, 0x00330, 0x01E1A},
  {0x00046, 0x00307, 0x01E1E},
  {0x00047, 0x00301, 0x001F4},
  {0x00047, 0x00302, 0x0011C},
  {0x00047, 0x00304, 0x01E20},
  {0x00047, 0x00306, 0x0011E},
  {0x00047, 0x00307, 0x00120},
  {0x00047, 0x0030C, 0x001E6},
  {0x00047, 0x00327, 0x00122},
  {0x00048, 0x00302, 0x00124},
  {0x00048, 0x00307, 0x01E22},
  {0x00048, 0x00308, 0x01E26},
  {0x00048, 0x0030C, 0x0021E},
  {0x00048, 0x00323, 0x01E24},
  {0x00048, 0x00327, 0x01E28},
  {0x00048, 0x0032E, 0x01E2A},
  {0x00049, 0x00300, 0x000CC},
  {0x00049, 0x00301, 0x000CD},
  {0x00049, 0x00302, 0x000CE},
  {0x00049, 0x00303, 0x00128},
  {0x00049, 0x00304, 0x0012A},
  {0x00049, 0x00306, 0x0012C},
  {0x00049, 0x00307, 0x00130},
  {0x00049, 0x00308, 0x000CF},
  {0x00049, 0x00309, 0x01EC8},
  {0x00049, 0x0030C, 0x001CF},
  {0x00049, 0x0030F, 0x00208},
  {0x00049, 0x00311, 0x0020A},
  {0x00049, 0x00323, 0x01ECA},
  {0x00049, 0x00328, 0x0012E},
  {0x00049, 0x00330, 0x01E2C},
  {0x0004A, 0x00302, 0x00134},
  {0x0004B, 0x00301, 0x01E30},
  {0x0004B, 0x0030C, 0x001E8},
  {0x0004B, 0x00323, 0x01E32},
  {0x0004B, 0x00327, 0x00136},
  {0x0004B, 0x00331, 0x01E34},
  {0x0004C, 0x00301, 0x00139},
  {0x0004C, 0x0030C, 0x0013D},
  {0x0004C, 0x00323, 0x01E36},
  {0x0004C, 0x00327, 0x0013B},
  {0x0004C, 0x0032D, 0x01E3C},
  {0x0004C, 0x00331, 0x01E3A},
  {0x0004D, 0x00301, 0x01E3E},
  {0x0004D, 0x00307, 0x01E40},
  {0x0004D, 0x00323, 0x01E42},
  {0x0004E, 0x00300, 0x001F8},
  {0x0004E, 0x00301, 0x00143},
  {0x0004E, 0x00303, 0x000D1},
  {0x0004E, 0x00307, 0x01E44},
  {0x0004E, 0x0030C, 0x00147},
  {0x0004E, 0x00323, 0x01E46},
  {0x0004E, 0x00327, 0x00145},
  {0x0004E, 0x0032D, 0x01E4A},
  {0x0004E, 0x00331, 0x01E48},
  {0x0004F, 0x00300, 0x000D2},
  {0x0004F, 0x00301, 0x000D3},
  {0x0004F, 0x00302, 0x000D4},
  {0x0004F, 0x00303, 0x000D5},
  {0x0004F, 0x00304, 0x0014C},
  {0x0004F, 0x00306, 0x0014E},
  {0x0004F, 0x00307, 0x0022E},
  {0x0004F, 0x00308, 0x000D6},
  {0x0004F, 0x00309, 0x01ECE},
  {0x0004F, 0x0030B, 0x00150},
  {0x0004F, 0x0030C, 0x001D1},
  {0x0004F, 0x0030F, 0x0020C},
  {0x0004F, 0x00311, 0x0020E},
  {0x0004F, 0x0031B, 0x001A0},
  {0x0004F, 0x00323, 0x01ECC},
  {0x0004F, 0x00328, 0x001EA},
  {0x00050, 0x00301, 0x01E54},
  {0x00050, 0x00307, 0x01E56},
  {0x00052, 0x00301, 0x00154},
  {0x00052, 0x00307, 0x01E58},
  {0x00052, 0x0030C, 0x00158},
  {0x00052, 0x0030F, 0x00210},
  {0x00052, 0x00311, 0x00212},
  {0x00052, 0x00323, 0x01E5A},
  {0x00052, 0x00327, 0x00156},
  {0x00052, 0x00331, 0x01E5E},
  {0x00053, 0x00301, 0x0015A},
  {0x00053, 0x00302, 0x0015C},
  {0x00053, 0x00307, 0x01E60},
  {0x00053, 0x0030C, 0x00160},
  {0x00053, 0x00323, 0x01E62},
  {0x00053, 0x00326, 0x00218},
  {0x00053, 0x00327, 0x0015E},
  {0x00054, 0x00307, 0x01E6A},
  {0x00054, 0x0030C, 0x00164},
  {0x00054, 0x00323, 0x01E6C},
  {0x00054, 0x00326, 0x0021A},
  {0x00054, 0x00327, 0x00162},
  {0x00054, 0x0032D, 0x01E70},
  {0x00054, 0x00331, 0x01E6E},
  {0x00055, 0x00300, 0x000D9},
  {0x00055, 0x00301, 0x000DA},
  {0x00055, 0x00302, 0x000DB},
  {0x00055, 0x00303, 0x00168},
  {0x00055, 0x00304, 0x0016A},
  {0x00055, 0x00306, 0x0016C},
  {0x00055, 0x00308, 0x000DC},
  {0x00055, 0x00309, 0x01EE6},
  {0x00055, 0x0030A, 0x0016E},
  {0x00055, 0x0030B, 0x00170},
  {0x00055, 0x0030C, 0x001D3},
  {0x00055, 0x0030F, 0x00214},
  {0x00055, 0x00311, 0x00216},
  {0x00055, 0x0031B, 0x001AF},
  {0x00055, 0x00323, 0x01EE4},
  {0x00055, 0x00324, 0x01E72},
  {0x00055, 0x00328, 0x00172},
  {0x00055, 0x0032D, 0x01E76},
  {0x00055, 0x00330, 0x01E74},
  {0x00056, 0x00303, 0x01E7C},
  {0x00056, 0x00323, 0x01E7E},
  {0x00057, 0x00300, 0x01E80},
  {0x00057, 0x00301, 0x01E82},
  {0x00057, 0x00302, 0x00174},
  {0x00057, 0x00307, 0x01E86},
  {0x00057, 0x00308, 0x01E84},
  {0x00057, 0x00323, 0x01E88},
  {0x00058, 0x00307, 0x01E8A},
  {0x00058, 0x00308, 0x01E8C},
  {0x00059, 0x00300, 0x01EF2},
  {0x00059, 0x00301, 0x000DD},
  {0x00059, 0x00302, 0x00176},
  {0x00059, 0x00303, 0x01EF8},
  {0x00059, 0x00304, 0x00232},
  {0x00059, 0x00307, 0x01E8E},
  {0x00059, 0x00308, 0x00178},
  {0x00059, 0x00309, 0x01EF6},
  {0x00059, 0x00323, 0x01EF4},
  {0x0005A, 0x00301, 0x00179},
  {0x0005A, 0x00302, 0x01E90},
  {0x0005A, 0x00307, 0x0017B},
  {0x0005A, 0x0030C, 0x0017D},
  {0x0005A, 0x00323, 0x01E92},
  {0x0005A, 0x00331, 0x01E94},
  {0x00061, 0x00300, 0x000E0},
  {0x00061, 0x00301, 0x000E1},
  {0x00061, 0x00302, 0x000E2},
  {0x00061, 0x00303, 0x000E3},
  {0x00061, 0x00304, 0x00101},
  {0x00061, 0x00306, 0x00103},
  {0x00061, 0x00307, 0x00227},
  {0x00061, 0x00308, 0x000E4},
  {0x00061, 0x00309, 0x01EA3},
  {0x00061, 0x0030A, 0x000E5},
  {0x00061, 0x0030C, 0x001CE},
  {0x00061, 0x0030F, 0x00201},
  {0x00061, 0x00311, 0x00203},
  {0x00061, 0x00323, 0x01EA1},
  {0x00061, 0x00325, 0x01E01},
  {0x00061, 0x00328, 0x00105},
  {0x00062, 0x00307, 0x01E03},
  {0x00062, 0x00323, 0x01E05},
  {0x00062, 0x00331, 0x01E07},
  {0x00063, 0x00301, 0x00107},
  {0x00063, 0x00302, 0x00109},
  {0x00063, 0x00307, 0x0010B},
  {0x00063, 0x0030C, 0x0010D},
  {0x00063, 0x00327, 0x000E7},
  {0x00064, 0x00307, 0x01E0B},
  {0x00064, 0x0030C, 0x0010F},
  {0x00064, 0x00323, 0x01E0D},
  {0x00064, 0x00327, 0x01E11},
  {0x00064, 0x0032D, 0x01E13},
  {0x00064, 0x00331, 0x01E0F},
  {0x00065, 0x00300, 0x000E8},
  {0x00065, 0x00301, 0x000E9},
  {0x00065, 0x00302, 0x000EA},
  {0x00065, 0x00303, 0x01EBD},
  {0x00065, 0x00304, 0x00113},
  {0x00065, 0x00306, 0x00115},
  {0x00065, 0x00307, 0x00117},
  {0x00065, 0x00308, 0x000EB},
  {0x00065, 0x00309, 0x01EBB},
  {0x00065, 0x0030C, 0x0011B},
  {0x00065, 0x0030F, 0x00205},
  {0x00065, 0x00311, 0x00207},
  {0x00065, 0x00323, 0x01EB9},
  {0x00065, 0x00327, 0x00229},
  {0x00065, 0x00328, 0x00119},
  {0x00065, 0x0032D, 0x01E19},
  {0x00065, 0x00330, 0x01E1B},
  {0x00066, 0x00307, 0x01E1F},
  {0x00067, 0x00301, 0x001F5},
  {0x00067, 0x00302, 0x0011D},
  {0x00067, 0x00304, 0x01E21},
  {0x00067, 0x00306, 0x0011F},
  {0x00067, 0x00307, 0x00121},
  {0x00067, 0x0030C, 0x001E7},
  {0x00067, 0x00327, 0x00123},
  {0x00068, 0x00302, 0x00125},
  {0x00068, 0x00307, 0x01E23},
  {0x00068, 0x00308, 0x01E27},
  {0x00068, 0x0030C, 0x0021F},
  {0x00068, 0x00323, 0x01E25},
  {0x00068, 0x00327, 0x01E29},
  {0x00068, 0x0032E, 0x01E2B},
  {0x00068, 0x00331, 0x01E96},
  {0x00069, 0x00300, 0x000EC},
  {0x00069, 0x00301, 0x000ED},
  {0x00069, 0x00302, 0x000EE},
  {0x00069, 0x00303, 0x00129},
  {0x00069, 0x00304, 0x0012B},
  {0x00069, 0x00306, 0x0012D},
  {0x00069, 0x00308, 0x000EF},
  {0x00069, 0x00309, 0x01EC9},
  {0x00069, 0x0030C, 0x001D0},
  {0x00069, 0x0030F, 0x00209},
  {0x00069, 0x00311, 0x0020B},
  {0x00069, 0x00323, 0x01ECB},
  {0x00069, 0x00328, 0x0012F},
  {0x00069, 0x00330, 0x01E2D},
  {0x0006A, 0x00302, 0x00135},
  {0x0006A, 0x0030C, 0x001F0},
  {0x0006B, 0x00301, 0x01E31},
  {0x0006B, 0x0030C, 0x001E9},
  {0x0006B, 0x00323, 0x01E33},
  {0x0006B, 0x00327, 0x00137},
  {0x0006B, 0x00331, 0x01E35},
  {0x0006C, 0x00301, 0x0013A},
  {0x0006C, 0x0030C, 0x0013E},
  {0x0006C, 0x00323, 0x01E37},
  {0x0006C, 0x00327, 0x0013C},
  {0x0006C, 0x0032D, 0x01E3D},
  {0x0006C, 0x00331, 0x01E3B},
  {0x0006D, 0x00301, 0x01E3F},
  {0x0006D, 0x00307, 0x01E41},
  {0x0006D, 0x00323, 0x01E43},
  {0x0006E, 0x00300, 0x001F9},
  {0x0006E, 0x00301, 0x00144},
  {0x0006E, 0x00303, 0x000F1},
  {0x0006E, 0x00307, 0x01E45},
  {0x0006E, 0x0030C, 0x00148},
  {0x0006E, 0x00323, 0x01E47},
  {0x0006E, 0x00327, 0x00146},
  {0x0006E, 0x0032D, 0x01E4B},
  {0x0006E, 0x00331, 0x01E49},
  {0x0006F, 0x00300, 0x000F2},
  {0x0006F, 0x00301, 0x000F3},
  {0x0006F, 0x00302, 0x000F4},
  {0x0006F, 0x00303, 0x000F5},
  {0x0006F, 0x00304, 0x0014D},
  {0x0006F, 0x00306, 0x0014F},
  {0x0006F, 0x00307, 0x0022F},
  {0x0006F, 0x00308, 0x000F6},
  {0x0006F, 0x00309, 0x01ECF},
  {0x0006F, 0x0030B, 0x00151},
  {0x0006F, 0x0030C, 0x001D2},
  {0x0006F, 0x0030F, 0x0020D},
  {0x0006F, 0x00311, 0x0020F},
  {0x0006F, 0x0031B, 0x001A1},
  {0x0006F, 0x00323, 0x01ECD},
  {0x0006F, 0x00328, 0x001EB},
  {0x00070, 0x00301, 0x01E55},
  {0x00070, 0x00307, 0x01E57},
  {0x00072, 0x00301, 0x00155},
  {0x00072, 0x00307, 0x01E59},
  {0x00072, 0x0030C, 0x00159},
  {0x00072, 0x0030F, 0x00211},
  {0x00072, 0x00311, 0x00213},
  {0x00072, 0x00323, 0x01E5B},
  {0x00072, 0x00327, 0x00157},
  {0x00072, 0x00331, 0x01E5F},
  {0x00073, 0x00301, 0x0015B},
  {0x00073, 0x00302, 0x0015D},
  {0x00073, 0x00307, 0x01E61},
  {0x00073, 0x0030C, 0x00161},
  {0x00073, 0x00323, 0x01E63},
  {0x00073, 0x00326, 0x00219},
  {0x00073, 0x00327, 0x0015F},
  {0x00074, 0x00307, 0x01E6B},
  {0x00074, 0x00308, 0x01E97},
  {0x00074, 0x0030C, 0x00165},
  {0x00074, 0x00323, 0x01E6D},
  {0x00074, 0x00326, 0x0021B},
  {0x00074, 0x00327, 0x00163},
  {0x00074, 0x0032D, 0x01E71},
  {0x00074, 0x00331, 0x01E6F},
  {0x00075, 0x00300, 0x000F9},
  {0x00075, 0x00301, 0x000FA},
  {0x00075, 0x00302, 0x000FB},
  {0x00075, 0x00303, 0x00169},
  {0x00075, 0x00304, 0x0016B},
  {0x00075, 0x00306, 0x0016D},
  {0x00075, 0x00308, 0x000FC},
  {0x00075, 0x00309, 0x01EE7},
  {0x00075, 0x0030A, 0x0016F},
  {0x00075, 0x0030B, 0x00171},
  {0x00075, 0x0030C, 0x001D4},
  {0x00075, 0x0030F, 0x00215},
  {0x00075, 0x00311, 0x00217},
  {0x00075, 0x0031B, 0x001B0},
  {0x00075, 0x00323, 0x01EE5},
  {0x00075, 0x00324, 0x01E73},
  {0x00075, 0x00328, 0x00173},
  {0x00075, 0x0032D, 0x01E77},
  {0x00075, 0x00330, 0x01E75},
  {0x00076, 0x00303, 0x01E7D},
  {0x00076, 0x00323, 0x01E7F},
  {0x00077, 0x00300, 0x01E81},
  {0x00077, 0x00301, 0x01E83},
  {0x00077, 0x00302, 0x00175},
  {0x00077, 0x00307, 0x01E87},
  {0x00077, 0x00308, 0x01E85},
  {0x00077, 0x0030A, 0x01E98},
  {0x00077, 0x00323, 0x01E89},
  {0x00078, 0x00307, 0x01E8B},
  {0x00078, 0x00308, 0x01E8D},
  {0x00079, 0x00300, 0x01EF3},
  {0x00079, 0x00301, 0x000FD},
  {0x00079, 0x00302, 0x00177},
  {0x00079, 0x00303, 0x01EF9},
  {0x00079, 0x00304, 0x00233},
  {0x00079, 0x00307, 0x01E8F},
  {0x00079, 0x00308, 0x000FF},
  {0x00079, 0x00309, 0x01EF7},
  {0x00079, 0x0030A, 0x01E99},
  {0x00079, 0x00323, 0x01EF5},
  {0x0007A, 0x00301, 0x0017A},
  {0x0007A, 0x00302, 0x01E91},
  {0x0007A, 0x00307, 0x0017C},
  {0x0007A, 0x0030C, 0x0017E},
  {0x0007A, 0x00323, 0x01E93},
  {0x0007A, 0x00331, 0x01E95},
  {0x000A8, 0x00300, 0x01FED},
  {0x000A8, 0x00301, 0x00385},
  {0x000A8, 0x00342, 0x01FC1},
  {0x000C2, 0x00300, 0x01EA6},
  {0x000C2, 0x00301, 0x01EA4},
  {0x000C2, 0x00303, 0x01EAA},
  {0x000C2, 0x00309, 0x01EA8},
  {0x000C4, 0x00304, 0x001DE},
  {0x000C5, 0x00301, 0x001FA},
  {0x000C6, 0x00301, 0x001FC},
  {0x000C6, 0x00304, 0x001E2},
  {0x000C7, 0x00301, 0x01E08},
  {0x000CA, 0x00300, 0x01EC0},
  {0x000CA, 0x00301, 0x01EBE},
  {0x000CA, 0x00303, 0x01EC4},
  {0x000CA, 0x00309, 0x01EC2},
  {0x000CF, 0x00301, 0x01E2E},
  {0x000D4, 0x00300, 0x01ED2},
  {0x000D4, 0x00301, 0x01ED0},
  {0x000D4, 0x00303, 0x01ED6},
  {0x000D4, 0x00309, 0x01ED4},
  {0x000D5, 0x00301, 0x01E4C},
  {0x000D5, 0x00304, 0x0022C},
  {0x000D5, 0x00308, 0x01E4E},
  {0x000D6, 0x00304, 0x0022A},
  {0x000D8, 0x00301, 0x001FE},
  {0x000DC, 0x00300, 0x001DB},
  {0x000DC, 0x00301, 0x001D7},
  {0x000DC, 0x00304, 0x001D5},
  {0x000DC, 0x0030C, 0x001D9},
  {0x000E2, 0x00300, 0x01EA7},
  {0x000E2, 0x00301, 0x01EA5},
  {0x000E2, 0x00303, 0x01EAB},
  {0x000E2, 0x00309, 0x01EA9},
  {0x000E4, 0x00304, 0x001DF},
  {0x000E5, 0x00301, 0x001FB},
  {0x000E6, 0x00301, 0x001FD},
  {0x000E6, 0x00304, 0x001E3},
  {0x000E7, 0x00301, 0x01E09},
  {0x000EA, 0x00300, 0x01EC1},
  {0x000EA, 0x00301, 0x01EBF},
  {0x000EA, 0x00303, 0x01EC5},
  {0x000EA, 0x00309, 0x01EC3},
  {0x000EF, 0x00301, 0x01E2F},
  {0x000F4, 0x00300, 0x01ED3},
  {0x000F4, 0x00301, 0x01ED1},
  {0x000F4, 0x00303, 0x01ED7},
  {0x000F4, 0x00309, 0x01ED5},
  {0x000F5, 0x00301, 0x01E4D},
  {0x000F5, 0x00304, 0x0022D},
  {0x000F5, 0x00308, 0x01E4F},
  {0x000F6, 0x00304, 0x0022B},
  {0x000F8, 0x00301, 0x001FF},
  {0x000FC, 0x00300, 0x001DC},
  {0x000FC, 0x00301, 0x001D8},
  {0x000FC, 0x00304, 0x001D6},
  {0x000FC, 0x0030C, 0x001DA},
  {0x00102, 0x00300, 0x01EB0},
  {0x00102, 0x00301, 0x01EAE},
  {0x00102, 0x00303, 0x01EB4},
  {0x00102, 0x00309, 0x01EB2},
  {0x00103, 0x00300, 0x01EB1},
  {0x00103, 0x00301, 0x01EAF},
  {0x00103, 0x00303, 0x01EB5},
  {0x00103, 0x00309, 0x01EB3},
  {0x00112, 0x00300, 0x01E14},
  {0x00112, 0x00301, 0x01E16},
  {0x00113, 0x00300, 0x01E15},
  {0x00113, 0x00301, 0x01E17},
  {0x0014C, 0x00300, 0x01E50},
  {0x0014C, 0x00301, 0x01E52},
  {0x0014D, 0x00300, 0x01E51},
  {0x0014D, 0x00301, 0x01E53},
  {0x0015A, 0x00307, 0x01E64},
  {0x0015B, 0x00307, 0x01E65},
  {0x00160, 0x00307, 0x01E66},
  {0x00161, 0x00307, 0x01E67},
  {0x00168, 0x00301, 0x01E78},
  {0x00169, 0x00301, 0x01E79},
  {0x0016A, 0x00308, 0x01E7A},
  {0x0016B, 0x00308, 0x01E7B},
  {0x0017F, 0x00307, 0x01E9B},
  {0x001A0, 0x00300, 0x01EDC},
  {0x001A0, 0x00301, 0x01EDA},
  {0x001A0, 0x00303, 0x01EE0},
  {0x001A0, 0x00309, 0x01EDE},
  {0x001A0, 0x00323, 0x01EE2},
  {0x001A1, 0x00300, 0x01EDD},
  {0x001A1, 0x00301, 0x01EDB},
  {0x001A1, 0x00303, 0x01EE1},
  {0x001A1, 0x00309, 0x01EDF},
  {0x001A1, 0x00323, 0x01EE3},
  {0x001AF, 0x00300, 0x01EEA},
  {0x001AF, 0x00301, 0x01EE8},
  {0x001AF, 0x00303, 0x01EEE},
  {0x001AF, 0x00309, 0x01EEC},
  {0x001AF, 0x00323, 0x01EF0},
  {0x001B0, 0x00300, 0x01EEB},
  {0x001B0, 0x00301, 0x01EE9},
  {0x001B0, 0x00303, 0x01EEF},
  {0x001B0, 0x00309, 0x01EED},
  {0x001B0, 0x00323, 0x01EF1},
  {0x001B7, 0x0030C, 0x001EE},
  {0x001EA, 0x00304, 0x001EC},
  {0x001EB, 0x00304, 0x001ED},
  {0x00226, 0x00304, 0x001E0},
  {0x00227, 0x00304, 0x001E1},
  {0x00228, 0x00306, 0x01E1C},
  {0x00229, 0x00306, 0x01E1D},
  {0x0022E, 0x00304, 0x00230},
  {0x0022F, 0x00304, 0x00231},
  {0x00292, 0x0030C, 0x001EF},
  {0x00391, 0x00300, 0x01FBA},
  {0x00391, 0x00301, 0x00386},
  {0x00391, 0x00304, 0x01FB9},
  {0x00391, 0x00306, 0x01FB8},
  {0x00391, 0x00313, 0x01F08},
  {0x00391, 0x00314, 0x01F09},
  {0x00391, 0x00345, 0x01FBC},
  {0x00395, 0x00300, 0x01FC8},
  {0x00395, 0x00301, 0x00388},
  {0x00395, 0x00313, 0x01F18},
  {0x00395, 0x00314, 0x01F19},
  {0x00397, 0x00300, 0x01FCA},
  {0x00397, 0x00301, 0x00389},
  {0x00397, 0x00313, 0x01F28},
  {0x00397, 0x00314, 0x01F29},
  {0x00397, 0x00345, 0x01FCC},
  {0x00399, 0x00300, 0x01FDA},
  {0x00399, 0x00301, 0x0038A},
  {0x00399, 0x00304, 0x01FD9},
  {0x00399, 0x00306, 0x01FD8},
  {0x00399, 0x00308, 0x003AA},
  {0x00399, 0x00313, 0x01F38},
  {0x00399, 0x00314, 0x01F39},
  {0x0039F, 0x00300, 0x01FF8},
  {0x0039F, 0x00301, 0x0038C},
  {0x0039F, 0x00313, 0x01F48},
  {0x0039F, 0x00314, 0x01F49},
  {0x003A1, 0x00314, 0x01FEC},
  {0x003A5, 0x00300, 0x01FEA},
  {0x003A5, 0x00301, 0x0038E},
  {0x003A5, 0x00304, 0x01FE9},
  {0x003A5, 0x00306, 0x01FE8},
  {0x003A5, 0x00308, 0x003AB},
  {0x003A5, 0x00314, 0x01F59},
  {0x003A9, 0x00300, 0x01FFA},
  {0x003A9, 0x00301, 0x0038F},
  {0x003A9, 0x00313, 0x01F68},
  {0x003A9, 0x00314, 0x01F69},
  {0x003A9, 0x00345, 0x01FFC},
  {0x003AC, 0x00345, 0x01FB4},
  {0x003AE, 0x00345, 0x01FC4},
  {0x003B1, 0x00300, 0x01F70},
  {0x003B1, 0x00301, 0x003AC},
  {0x003B1, 0x00304, 0x01FB1},
  {0x003B1, 0x00306, 0x01FB0},
  {0x003B1, 0x00313, 0x01F00},
  {0x003B1, 0x00314, 0x01F01},
  {0x003B1, 0x00342, 0x01FB6},
  {0x003B1, 0x00345, 0x01FB3},
  {0x003B5, 0x00300, 0x01F72},
  {0x003B5, 0x00301, 0x003AD},
  {0x003B5, 0x00313, 0x01F10},
  {0x003B5, 0x00314, 0x01F11},
  {0x003B7, 0x00300, 0x01F74},
  {0x003B7, 0x00301, 0x003AE},
  {0x003B7, 0x00313, 0x01F20},
  {0x003B7, 0x00314, 0x01F21},
  {0x003B7, 0x00342, 0x01FC6},
  {0x003B7, 0x00345, 0x01FC3},
  {0x003B9, 0x00300, 0x01F76},
  {0x003B9, 0x00301, 0x003AF},
  {0x003B9, 0x00304, 0x01FD1},
  {0x003B9, 0x00306, 0x01FD0},
  {0x003B9, 0x00308, 0x003CA},
  {0x003B9, 0x00313, 0x01F30},
  {0x003B9, 0x00314, 0x01F31},
  {0x003B9, 0x00342, 0x01FD6},
  {0x003BF, 0x00300, 0x01F78},
  {0x003BF, 0x00301, 0x003CC},
  {0x003BF, 0x00313, 0x01F40},
  {0x003BF, 0x00314, 0x01F41},
  {0x003C1, 0x00313, 0x01FE4},
  {0x003C1, 0x00314, 0x01FE5},
  {0x003C5, 0x00300, 0x01F7A},
  {0x003C5, 0x00301, 0x003CD},
  {0x003C5, 0x00304, 0x01FE1},
  {0x003C5, 0x00306, 0x01FE0},
  {0x003C5, 0x00308, 0x003CB},
  {0x003C5, 0x00313, 0x01F50},
  {0x003C5, 0x00314, 0x01F51},
  {0x003C5, 0x00342, 0x01FE6},
  {0x003C9, 0x00300, 0x01F7C},
  {0x003C9, 0x00301, 0x003CE},
  {0x003C9, 0x00313, 0x01F60},
  {0x003C9, 0x00314, 0x01F61},
  {0x003C9, 0x00342, 0x01FF6},
  {0x003C9, 0x00345, 0x01FF3},
  {0x003CA, 0x00300, 0x01FD2},
  {0x003CA, 0x00301, 0x00390},
  {0x003CA, 0x00342, 0x01FD7},
  {0x003CB, 0x00300, 0x01FE2},
  {0x003CB, 0x00301, 0x003B0},
  {0x003CB, 0x00342, 0x01FE7},
  {0x003CE, 0x00345, 0x01FF4},
  {0x003D2, 0x00301, 0x003D3},
  {0x003D2, 0x00308, 0x003D4},
  {0x00406, 0x00308, 0x00407},
  {0x00410, 0x00306, 0x004D0},
  {0x00410, 0x00308, 0x004D2},
  {0x00413, 0x00301, 0x00403},
  {0x00415, 0x00300, 0x00400},
  {0x00415, 0x00306, 0x004D6},
  {0x00415, 0x00308, 0x00401},
  {0x00416, 0x00306, 0x004C1},
  {0x00416, 0x00308, 0x004DC},
  {0x00417, 0x00308, 0x004DE},
  {0x00418, 0x00300, 0x0040D},
  {0x00418, 0x00304, 0x004E2},
  {0x00418, 0x00306, 0x00419},
  {0x00418, 0x00308, 0x004E4},
  {0x0041A, 0x00301, 0x0040C},
  {0x0041E, 0x00308, 0x004E6},
  {0x00423, 0x00304, 0x004EE},
  {0x00423, 0x00306, 0x0040E},
  {0x00423, 0x00308, 0x004F0},
  {0x00423, 0x0030B, 0x004F2},
  {0x00427, 0x00308, 0x004F4},
  {0x0042B, 0x00308, 0x004F8},
  {0x0042D, 0x00308, 0x004EC},
  {0x00430, 0x00306, 0x004D1},
  {0x00430, 0x00308, 0x004D3},
  {0x00433, 0x00301, 0x00453},
  {0x00435, 0x00300, 0x00450},
  {0x00435, 0x00306, 0x004D7},
  {0x00435, 0x00308, 0x00451},
  {0x00436, 0x00306, 0x004C2},
  {0x00436, 0x00308, 0x004DD},
  {0x00437, 0x00308, 0x004DF},
  {0x00438, 0x00300, 0x0045D},
  {0x00438, 0x00304, 0x004E3},
  {0x00438, 0x00306, 0x00439},
  {0x00438, 0x00308, 0x004E5},
  {0x0043A, 0x00301, 0x0045C},
  {0x0043E, 0x00308, 0x004E7},
  {0x00443, 0x00304, 0x004EF},
  {0x00443, 0x00306, 0x0045E},
  {0x00443, 0x00308, 0x004F1},
  {0x00443, 0x0030B, 0x004F3},
  {0x00447, 0x00308, 0x004F5},
  {0x0044B, 0x00308, 0x004F9},
  {0x0044D, 0x00308, 0x004ED},
  {0x00456, 0x00308, 0x00457},
  {0x00474, 0x0030F, 0x00476},
  {0x00475, 0x0030F, 0x00477},
  {0x004D8, 0x00308, 0x004DA},
  {0x004D9, 0x00308, 0x004DB},
  {0x004E8, 0x00308, 0x004EA},
  {0x004E9, 0x00308, 0x004EB},
  {0x00627, 0x00653, 0x00622},
  {0x00627, 0x00654, 0x00623},
  {0x00627, 0x00655, 0x00625},
  {0x00648, 0x00654, 0x00624},
  {0x0064A, 0x00654, 0x00626},
  {0x006C1, 0x00654, 0x006C2},
  {0x006D2, 0x00654, 0x006D3},
  {0x006D5, 0x00654, 0x006C0},
  {0x00928, 0x0093C, 0x00929},
  {0x00930, 0x0093C, 0x00931},
  {0x00933, 0x0093C, 0x00934},
  {0x009C7, 0x009BE, 0x009CB},
  {0x009C7, 0x009D7, 0x009CC},
  {0x00B47, 0x00B3E, 0x00B4B},
  {0x00B47, 0x00B56, 0x00B48},
  {0x00B47, 0x00B57, 0x00B4C},
  {0x00B92, 0x00BD7, 0x00B94},
  {0x00BC6, 0x00BBE, 0x00BCA},
  {0x00BC6, 0x00BD7, 0x00BCC},
  {0x00BC7, 0x00BBE, 0x00BCB},
  {0x00C46, 0x00C56, 0x00C48},
  {0x00CBF, 0x00CD5, 0x00CC0},
  {0x00CC6, 0x00CC2, 0x00CCA},
  {0x00CC6, 0x00CD5, 0x00CC7},
  {0x00CC6, 0x00CD6, 0x00CC8},
  {0x00CCA, 0x00CD5, 0x00CCB},
  {0x00D46, 0x00D3E, 0x00D4A},
  {0x00D46, 0x00D57, 0x00D4C},
  {0x00D47, 0x00D3E, 0x00D4B},
  {0x00DD9, 0x00DCA, 0x00DDA},
  {0x00DD9, 0x00DCF, 0x00DDC},
  {0x00DD9, 0x00DDF, 0x00DDE},
  {0x00DDC, 0x00DCA, 0x00DDD},
  {0x01025, 0x0102E, 0x01026},
  {0x01B05, 0x01B35, 0x01B06},
  {0x01B07, 0x01B35, 0x01B08},
  {0x01B09, 0x01B35, 0x01B0A},
  {0x01B0B, 0x01B35, 0x01B0C},
  {0x01B0D, 0x01B35, 0x01B0E},
  {0x01B11, 0x01B35, 0x01B12},
  {0x01B3A, 0x01B35, 0x01B3B},
  {0x01B3C, 0x01B35, 0x01B3D},
  {0x01B3E, 0x01B35, 0x01B40},
  {0x01B3F, 0x01B35, 0x01B41},
  {0x01B42, 0x01B35, 0x01B43},
  {0x01E36, 0x00304, 0x01E38},
  {0x01E37, 0x00304, 0x01E39},
  {0x01E5A, 0x00304, 0x01E5C},
  {0x01E5B, 0x00304, 0x01E5D},
  {0x01E62, 0x00307, 0x01E68},
  {0x01E63, 0x00307, 0x01E69},
  {0x01EA0, 0x00302, 0x01EAC},
  {0x01EA0, 0x00306, 0x01EB6},
  {0x01EA1, 0x00302, 0x01EAD},
  {0x01EA1, 0x00306, 0x01EB7},
  {0x01EB8, 0x00302, 0x01EC6},
  {0x01EB9, 0x00302, 0x01EC7},
  {0x01ECC, 0x00302, 0x01ED8},
  {0x01ECD, 0x00302, 0x01ED9},
  {0x01F00, 0x00300, 0x01F02},
  {0x01F00, 0x00301, 0x01F04},
  {0x01F00, 0x00342, 0x01F06},
  {0x01F00, 0x00345, 0x01F80},
  {0x01F01, 0x00300, 0x01F03},
  {0x01F01, 0x00301, 0x01F05},
  {0x01F01, 0x00342, 0x01F07},
  {0x01F01, 0x00345, 0x01F81},
  {0x01F02, 0x00345, 0x01F82},
  {0x01F03, 0x00345, 0x01F83},
  {0x01F04, 0x00345, 0x01F84},
  {0x01F05, 0x00345, 0x01F85},
  {0x01F06, 0x00345, 0x01F86},
  {0x01F07, 0x00345, 0x01F87},
  {0x01F08, 0x00300, 0x01F0A},
  {0x01F08, 0x00301, 0x01F0C},
  {0x01F08, 0x00342, 0x01F0E},
  {0x01F08, 0x00345, 0x01F88},
  {0x01F09, 0x00300, 0x01F0B},
  {0x01F09, 0x00301, 0x01F0D},
  {0x01F09, 0x00342, 0x01F0F},
  {0x01F09, 0x00345, 0x01F89},
  {0x01F0A, 0x00345, 0x01F8A},
  {0x01F0B, 0x00345, 0x01F8B},
  {0x01F0C, 0x00345, 0x01F8C},
  {0x01F0D, 0x00345, 0x01F8D},
  {0x01F0E, 0x00345, 0x01F8E},
  {0x01F0F, 0x00345, 0x01F8F},
  {0x01F10, 0x00300, 0x01F12},
  {0x01F10, 0x00301, 0x01F14},
  {0x01F11, 0x00300, 0x01F13},
  {0x01F11, 0x00301, 0x01F15},
  {0x01F18, 0x00300, 0x01F1A},
  {0x01F18, 0x00301, 0x01F1C},
  {0x01F19, 0x00300, 0x01F1B},
  {0x01F19, 0x00301, 0x01F1D},
  {0x01F20, 0x00300, 0x01F22},
  {0x01F20, 0x00301, 0x01F24},
  {0x01F20, 0x00342, 0x01F26},
  {0x01F20, 0x00345, 0x01F90},
  {0x01F21, 0x00300, 0x01F23},
  {0x01F21, 0x00301, 0x01F25},
  {0x01F21, 0x00342, 0x01F27},
  {0x01F21, 0x00345, 0x01F91},
  {0x01F22, 0x00345, 0x01F92},
  {0x01F23, 0x00345, 0x01F93},
  {0x01F24, 0x00345, 0x01F94},
  {0x01F25, 0x00345, 0x01F95},
  {0x01F26, 0x00345, 0x01F96},
  {0x01F27, 0x00345, 0x01F97},
  {0x01F28, 0x00300, 0x01F2A},
  {0x01F28, 0x00301, 0x01F2C},
  {0x01F28, 0x00342, 0x01F2E},
  {0x01F28, 0x00345, 0x01F98},
  {0x01F29, 0x00300, 0x01F2B},
  {0x01F29, 0x00301, 0x01F2D},
  {0x01F29, 0x00342, 0x01F2F},
  {0x01F29, 0x00345, 0x01F99},
  {0x01F2A, 0x00345, 0x01F9A},
  {0x01F2B, 0x00345, 0x01F9B},
  {0x01F2C, 0x00345, 0x01F9C},
  {0x01F2D, 0x00345, 0x01F9D},
  {0x01F2E, 0x00345, 0x01F9E},
  {0x01F2F, 0x00345, 0x01F9F},
  {0x01F30, 0x00300, 0x01F32},
  {0x01F30, 0x00301, 0x01F34},
  {0x01F30, 0x00342, 0x01F36},
  {0x01F31, 0x00300, 0x01F33},
  {0x01F31, 0x00301, 0x01F35},
  {0x01F31, 0x00342, 0x01F37},
  {0x01F38, 0x00300, 0x01F3A},
  {0x01F38, 0x00301, 0x01F3C},
  {0x01F38, 0x00342, 0x01F3E},
  {0x01F39, 0x00300, 0x01F3B},
  {0x01F39, 0x00301, 0x01F3D},
  {0x01F39, 0x00342, 0x01F3F},
  {0x01F40, 0x00300, 0x01F42},
  {0x01F40, 0x00301, 0x01F44},
  {0x01F41, 0x00300, 0x01F43},
  {0x01F41, 0x00301, 0x01F45},
  {0x01F48, 0x00300, 0x01F4A},
  {0x01F48, 0x00301, 0x01F4C},
  {0x01F49, 0x00300, 0x01F4B},
  {0x01F49, 0x00301, 0x01F4D},
  {0x01F50, 0x00300, 0x01F52},
  {0x01F50, 0x00301, 0x01F54},
  {0x01F50, 0x00342, 0x01F56},
  {0x01F51, 0x00300, 0x01F53},
  {0x01F51, 0x00301, 0x01F55},
  {0x01F51, 0x00342, 0x01F57},
  {0x01F59, 0x00300, 0x01F5B},
  {0x01F59, 0x00301, 0x01F5D},
  {0x01F59, 0x00342, 0x01F5F},
  {0x01F60, 0x00300, 0x01F62},
  {0x01F60, 0x00301, 0x01F64},
  {0x01F60, 0x00342, 0x01F66},
  {0x01F60, 0x00345, 0x01FA0},
  {0x01F61, 0x00300, 0x01F63},
  {0x01F61, 0x00301, 0x01F65},
  {0x01F61, 0x00342, 0x01F67},
  {0x01F61, 0x00345, 0x01FA1},
  {0x01F62, 0x00345, 0x01FA2},
  {0x01F63, 0x00345, 0x01FA3},
  {0x01F64, 0x00345, 0x01FA4},
  {0x01F65, 0x00345, 0x01FA5},
  {0x01F66, 0x00345, 0x01FA6},
  {0x01F67, 0x00345, 0x01FA7},
  {0x01F68, 0x00300, 0x01F6A},
  {0x01F68, 0x00301, 0x01F6C},
  {0x01F68, 0x00342, 0x01F6E},
  {0x01F68, 0x00345, 0x01FA8},
  {0x01F69, 0x00300, 0x01F6B},
  {0x01F69, 0x00301, 0x01F6D},
  {0x01F69, 0x00342, 0x01F6F},
  {0x01F69, 0x00345, 0x01FA9},
  {0x01F6A, 0x00345, 0x01FAA},
  {0x01F6B, 0x00345, 0x01FAB},
  {0x01F6C, 0x00345, 0x01FAC},
  {0x01F6D, 0x00345, 0x01FAD},
  {0x01F6E, 0x00345, 0x01FAE},
  {0x01F6F, 0x00345, 0x01FAF},
  {0x01F70, 0x00345, 0x01FB2},
  {0x01F74, 0x00345, 0x01FC2},
  {0x01F7C, 0x00345, 0x01FF2},
  {0x01FB6, 0x00345, 0x01FB7},
  {0x01FBF, 0x00300, 0x01FCD},
  {0x01FBF, 0x00301, 0x01FCE},
  {0x01FBF, 0x00342, 0x01FCF},
  {0x01FC6, 0x00345, 0x01FC7},
  {0x01FF6, 0x00345, 0x01FF7},
  {0x01FFE, 0x00300, 0x01FDD},
  {0x01FFE, 0x00301, 0x01FDE},
  {0x01FFE, 0x00342, 0x01FDF},
  {0x02190, 0x00338, 0x0219A},
  {0x02192, 0x00338, 0x0219B},
  {0x02194, 0x00338, 0x021AE},
  {0x021D0, 0x00338, 0x021CD},
  {0x021D2, 0x00338, 0x021CF},
  {0x021D4, 0x00338, 0x021CE},
  {0x02203, 0x00338, 0x02204},
  {0x02208, 0x00338, 0x02209},
  {0x0220B, 0x00338, 0x0220C},
  {0x02223, 0x00338, 0x02224},
  {0x02225, 0x00338, 0x02226},
  {0x0223C, 0x00338, 0x02241},
  {0x02243, 0x00338, 0x02244},
  {0x02245, 0x00338, 0x02247},
  {0x02248, 0x00338, 0x02249},
  {0x0224D, 0x00338, 0x0226D},
  {0x02261, 0x00338, 0x02262},
  {0x02264, 0x00338, 0x02270},
  {0x02265, 0x00338, 0x02271},
  {0x02272, 0x00338, 0x02274},
  {0x02273, 0x00338, 0x02275},
  {0x02276, 0x00338, 0x02278},
  {0x02277, 0x00338, 0x02279},
  {0x0227A, 0x00338, 0x02280},
  {0x0227B, 0x00338, 0x02281},
  {0x0227C, 0x00338, 0x022E0},
  {0x0227D, 0x00338, 0x022E1},
  {0x02282, 0x00338, 0x02284},
  {0x02283, 0x00338, 0x02285},
  {0x02286, 0x00338, 0x02288},
  {0x02287, 0x00338, 0x02289},
  {0x02291, 0x00338, 0x022E2},
  {0x02292, 0x00338, 0x022E3},
  {0x022A2, 0x00338, 0x022AC},
  {0x022A8, 0x00338, 0x022AD},
  {0x022A9, 0x00338, 0x022AE},
  {0x022AB, 0x00338, 0x022AF},
  {0x022B2, 0x00338, 0x022EA},
  {0x022B3, 0x00338, 0x022EB},
  {0x022B4, 0x00338, 0x022EC},
  {0x022B5, 0x00338, 0x022ED},
  {0x03046, 0x03099, 0x03094},
  {0x0304B, 0x03099, 0x0304C},
  {0x0304D, 0x03099, 0x0304E},
  {0x0304F, 0x03099, 0x03050},
  {0x03051, 0x03099, 0x03052},
  {0x03053, 0x03099, 0x03054},
  {0x03055, 0x03099, 0x03056},
  {0x03057, 0x03099, 0x03058},
  {0x03059, 0x03099, 0x0305A},
  {0x0305B, 0x03099, 0x0305C},
  {0x0305D, 0x03099, 0x0305E},
  {0x0305F, 0x03099, 0x03060},
  {0x03061, 0x03099, 0x03062},
  {0x03064, 0x03099, 0x03065},
  {0x03066, 0x03099, 0x03067},
  {0x03068, 0x03099, 0x03069},
  {0x0306F, 0x03099, 0x03070},
  {0x0306F, 0x0309A, 0x03071},
  {0x03072, 0x03099, 0x03073},
  {0x03072, 0x0309A, 0x03074},
  {0x03075, 0x03099, 0x03076},
  {0x03075, 0x0309A, 0x03077},
  {0x03078, 0x03099, 0x03079},
  {0x03078, 0x0309A, 0x0307A},
  {0x0307B, 0x03099, 0x0307C},
  {0x0307B, 0x0309A, 0x0307D},
  {0x0309D, 0x03099, 0x0309E},
  {0x030A6, 0x03099, 0x030F4},
  {0x030AB, 0x03099, 0x030AC},
  {0x030AD, 0x03099, 0x030AE},
  {0x030AF, 0x03099, 0x030B0},
  {0x030B1, 0x03099, 0x030B2},
  {0x030B3, 0x03099, 0x030B4},
  {0x030B5, 0x03099, 0x030B6},
  {0x030B7, 0x03099, 0x030B8},
  {0x030B9, 0x03099, 0x030BA},
  {0x030BB, 0x03099, 0x030BC},
  {0x030BD, 0x03099, 0x030BE},
  {0x030BF, 0x03099, 0x030C0},
  {0x030C1, 0x03099, 0x030C2},
  {0x030C4, 0x03099, 0x030C5},
  {0x030C6, 0x03099, 0x030C7},
  {0x030C8, 0x03099, 0x030C9},
  {0x030CF, 0x03099, 0x030D0},
  {0x030CF, 0x0309A, 0x030D1},
  {0x030D2, 0x03099, 0x030D3},
  {0x030D2, 0x0309A, 0x030D4},
  {0x030D5, 0x03099, 0x030D6},
  {0x030D5, 0x0309A, 0x030D7},
  {0x030D8, 0x03099, 0x030D9},
  {0x030D8, 0x0309A, 0x030DA},
  {0x030DB, 0x03099, 0x030DC},
  {0x030DB, 0x0309A, 0x030DD},
  {0x030EF, 0x03099, 0x030F7},
  {0x030F0, 0x03099, 0x030F8},
  {0x030F1, 0x03099, 0x030F9},
  {0x030F2, 0x03099, 0x030FA},
  {0x030FD, 0x03099, 0x030FE},
  {0x11099, 0x110BA, 0x1109A},
  {0x1109B, 0x110BA, 0x1109C},
  {0x110A5, 0x110BA, 0x110AB},
  {0x11131, 0x11127, 0x1112E},
  {0x11132, 0x11127, 0x1112F},
  {0x11347, 0x1133E, 0x1134B},
  {0x11347, 0x11357, 0x1134C},
  {0x114B9, 0x114B0, 0x114BC},
  {0x114B9, 0x114BA, 0x114BB},
  {0x114B9, 0x114BD, 0x114BE},
  {0x115B8, 0x115AF, 0x115BA},
  {0x115B9, 0x115AF, 0x115BB},
  {0x11935, 0x11930, 0x11938},
};
const std::size_t composition_count = 941;

const CaseMapEntry simple_uppercase_entries[1383] = {
  {0x00061, 0x00041},
  {0x00062, 0x00042},
  {0x00063, 0x00043},
  {0x00064, 0x00044},
  {0x00065, 0x00045},
  {0x00066, 0x00046},
  {0x00067, 0x00047},
  {0x00068, 0x00048},
  {0x00069, 0x00049},
  {0x0006A, 0x0004A},
  {0x0006B, 0x0004B},
  {0x0006C, 0x0004C},
  {0x0006D, 0x0004D},
  {0x0006E, 0x0004E},
  {0x0006F, 0x0004F},
  {0x00070, 0x00050},
  {0x00071, 0x00051},
  {0x00072, 0x00052},
  {0x00073, 0x00053},
  {0x00074, 0x00054},
  {0x00075, 0x00055},
  {0x00076, 0x00056},
  {0x00077, 0x00057},
  {0x00078, 0x00058},
  {0x00079, 0x00059},
  {0x0007A, 0x0005A},
  {0x000B5, 0x0039C},
  {0x000E0, 0x000C0},
  {0x000E1, 0x000C1},
  {0x000E2, 0x000C2},
  {0x000E3, 0x000C3},
  {0x000E4, 0x000C4},
  {0x000E5, 0x000C5},
  {0x000E6, 0x000C6},
  {0x000E7, 0x000C7},
  {0x000E8, 0x000C8},
  {0x000E9, 0x000C9},
  {0x000EA, 0x000CA},
  {0x000EB, 0x000CB},
  {0x000EC, 0x000CC},
  {0x000ED, 0x000CD},
  {0x000EE, 0x000CE},
  {0x000EF, 0x000CF},
  {0x000F0, 0x000D0},
  {0x000F1, 0x000D1},
  {0x000F2, 0x000D2},
  {0x000F3, 0x000D3},
  {0x000F4, 0x000D4},
  {0x000F5, 0x000D5},
  {0x000F6, 0x000D6},
  {0x000F8, 0x000D8},
  {0x000F9, 0x000D9},
  {0x000FA, 0x000DA},
  {0x000FB, 0x000DB},
  {0x000FC, 0x000DC},
  {0x000FD, 0x000DD},
  {0x000FE, 0x000DE},
  {0x000FF, 0x00178},
  {0x00101, 0x00100},
  {0x00103, 0x00102},
  {0x00105, 0x00104},
  {0x00107, 0x00106},
  {0x00109, 0x00108},
  {0x0010B, 0x0010A},
  {0x0010D, 0x0010C},
  {0x0010F, 0x0010E},
  {0x00111, 0x00110},
  {0x00113, 0x00112},
  {0x00115, 0x00114},
  {0x00117, 0x00116},
  {0x00119, 0x00118},
  {0x0011B, 0x0011A},
  {0x0011D, 0x0011C},
  {0x0011F, 0x0011E},
  {0x00121, 0x00120},
  {0x00123, 0x00122},
  {0x00125, 0x00124},
  {0x00127, 0x00126},
  {0x00129, 0x00128},
  {0x0012B, 0x0012A},
  {0x0012D, 0x0012C},
  {0x0012F, 0x0012E},
  {0x00131, 0x00049},
  {0x00133, 0x00132},
  {0x00135, 0x00134},
  {0x00137, 0x00136},
  {0x0013A, 0x00139},
  {0x0013C, 0x0013B},
  {0x0013E, 0x0013D},
  {0x00140, 0x0013F},
  {0x00142, 0x00141},
  {0x00144, 0x00143},
  {0x00146, 0x00145},
  {0x00148, 0x00147},
  {0x0014B, 0x0014A},
  {0x0014D, 0x0014C},
  {0x0014F, 0x0014E},
  {0x00151, 0x00150},
  {0x00153, 0x00152},
  {0x00155, 0x00154},
  {0x00157, 0x00156},
  {0x00159, 0x00158},
  {0x0015B, 0x0015A},
  {0x0015D, 0x0015C},
  {0x0015F, 0x0015E},
  {0x00161, 0x00160},
  {0x00163, 0x00162},
  {0x00165, 0x00164},
  {0x00167, 0x00166},
  {0x00169, 0x00168},
  {0x0016B, 0x0016A},
  {0x0016D, 0x0016C},
  {0x0016F, 0x0016E},
  {0x00171, 0x00170},
  {0x00173, 0x00172},
  {0x00175, 0x00174},
  {0x00177, 0x00176},
  {0x0017A, 0x00179},
  {0x0017C, 0x0017B},
  {0x0017E, 0x0017D},
  {0x0017F, 0x00053},
  {0x00180, 0x00243},
  {0x00183, 0x00182},
  {0x00185, 0x00184},
  {0x00188, 0x00187},
  {0x0018C, 0x0018B},
  {0x00192, 0x00191},
  {0x00195, 0x001F6},
  {0x00199, 0x00198},
  {0x0019A, 0x0023D},
  {0x0019E, 0x00220},
  {0x001A1, 0x001A0},
  {0x001A3, 0x001A2},
  {0x001A5, 0x001A4},
  {0x001A8, 0x001A7},
  {0x001AD, 0x001AC},
  {0x001B0, 0x001AF},
  {0x001B4, 0x001B3},
  {0x001B6, 0x001B5},
  {0x001B9, 0x001B8},
  {0x001BD, 0x001BC},
  {0x001BF, 0x001F7},
  {0x001C5, 0x001C4},
  {0x001C6, 0x001C4},
  {0x001C8, 0x001C7},
  {0x001C9, 0x001C7},
  {0x001CB, 0x001CA},
  {0x001CC, 0x001CA},
  {0x001CE, 0x001CD},
  {0x001D0, 0x001CF},
  {0x001D2, 0x001D1},
  {0x001D4, 0x001D3},
  {0x001D6, 0x001D5},
  {0x001D8, 0x001D7},
  {0x001DA, 0x001D9},
  {0x001DC, 0x001DB},
  {0x001DD, 0x0018E},
  {0x001DF, 0x001DE},
  {0x001E1, 0x001E0},
  {0x001E3, 0x001E2},
  {0x001E5, 0x001E4},
  {0x001E7, 0x001E6},
  {0x001E9, 0x001E8},
  {0x001EB, 0x001EA},
  {0x001ED, 0x001EC},
  {0x001EF, 0x001EE},
  {0x001F2, 0x001F1},
  {0x001F3, 0x001F1},
  {0x001F5, 0x001F4},
  {0x001F9, 0x001F8},
  {0x001FB, 0x001FA},
  {0x001FD, 0x001FC},
  {0x001FF, 0x001FE},
  {0x00201, 0x00200},
  {0x00203, 0x00202},
  {0x00205, 0x00204},
  {0x00207, 0x00206},
  {0x00209, 0x00208},
  {0x0020B, 0x0020A},
  {0x0020D, 0x0020C},
  {0x0020F, 0x0020E},
  {0x00211, 0x00210},
  {0x00213, 0x00212},
  {0x00215, 0x00214},
  {0x00217, 0x00216},
  {0x00219, 0x00218},
  {0x0021B, 0x0021A},
  {0x0021D, 0x0021C},
  {0x0021F, 0x0021E},
  {0x00223, 0x00222},
  {0x00225, 0x00224},
  {0x00227, 0x00226},
  {0x00229, 0x00228},
  {0x0022B, 0x0022A},
  {0x0022D, 0x0022C},
  {0x0022F, 0x0022E},
  {0x00231, 0x00230},
  {0x00233, 0x00232},
  {0x0023C, 0x0023B},
  {0x0023F, 0x02C7E},
  {0x00240, 0x02C7F},
  {0x00242, 0x00241},
  {0x00247, 0x00246},
  {0x00249, 0x00248},
  {0x0024B, 0x0024A},
  {0x0024D, 0x0024C},
  {0x0024F, 0x0024E},
  {0x00250, 0x02C6F},
  {0x00251, 0x02C6D},
  {0x00252, 0x02C70},
  {0x00253, 0x00181},
  {0x00254, 0x00186},
  {0x00256, 0x00189},
  {0x00257, 0x0018A},
  {0x00259, 0x0018F},
  {0x0025B, 0x00190},
  {0x0025C, 0x0A7AB},
  {0x00260, 0x00193},
  {0x00261, 0x0A7AC},
  {0x00263, 0x00194},
  {0x00265, 0x0A78D},
  {0x00266, 0x0A7AA},
  {0x00268, 0x00197},
  {0x00269, 0x00196},
  {0x0026A, 0x0A7AE},
  {0x0026B, 0x02C62},
  {0x0026C, 0x0A7AD},
  {0x0026F, 0x0019C},
  {0x00271, 0x02C6E},
  {0x00272, 0x0019D},
  {0x00275, 0x0019F},
  {0x0027D, 0x02C64},
  {0x00280, 0x001A6},
  {0x00282, 0x0A7C5},
  {0x00283, 0x001A9},
  {0x00287, 0x0A7B1},
  {0x00288, 0x001AE},
  {0x00289, 0x00244},
  {0x0028A, 0x001B1},
  {0x0028B, 0x001B2},
  {0x0028C, 0x00245},
  {0x00292, 0x001B7},
  {0x0029D, 0x0A7B2},
  {0x0029E, 0x0A7B0},
  {0x00345, 0x00399},
  {0x00371, 0x00370},
  {0x00373, 0x00372},
  {0x00377, 0x00376},
  {0x0037B, 0x003FD},
  {0x0037C, 0x003FE},
  {0x0037D, 0x003FF},
  {0x003AC, 0x00386},
  {0x003AD, 0x00388},
  {0x003AE, 0x00389},
  {0x003AF, 0x0038A},
  {0x003B1, 0x00391},
  {0x003B2, 0x00392},
  {0x003B3, 0x00393},
  {0x003B4, 0x00394},
  {0x003B5, 0x00395},
  {0x003B6, 0x00396},
  {0x003B7, 0x00397},
  {0x003B8, 0x00398},
  {0x003B9, 0x00399},
  {0x003BA, 0x0039A},
  {0x003BB, 0x0039B},
  {0x003BC, 0x0039C},
  {0x003BD, 0x0039D},
  {0x003BE, 0x0039E},
  {0x003BF, 0x0039F},
  {0x003C0, 0x003A0},
  {0x003C1, 0x003A1},
  {0x003C2, 0x003A3},
  {0x003C3, 0x003A3},
  {0x003C4, 0x003A4},
  {0x003C5, 0x003A5},
  {0x003C6, 0x003A6},
  {0x003C7, 0x003A7},
  {0x003C8, 0x003A8},
  {0x003C9, 0x003A9},
  {0x003CA, 0x003AA},
  {0x003CB, 0x003AB},
  {0x003CC, 0x0038C},
  {0x003CD, 0x0038E},
  {0x003CE, 0x0038F},
  {0x003D0, 0x00392},
  {0x003D1, 0x00398},
  {0x003D5, 0x003A6},
  {0x003D6, 0x003A0},
  {0x003D7, 0x003CF},
  {0x003D9, 0x003D8},
  {0x003DB, 0x003DA},
  {0x003DD, 0x003DC},
  {0x003DF, 0x003DE},
  {0x003E1, 0x003E0},
  {0x003E3, 0x003E2},
  {0x003E5, 0x003E4},
  {0x003E7, 0x003E6},
  {0x003E9, 0x003E8},
  {0x003EB, 0x003EA},
  {0x003ED, 0x003EC},
  {0x003EF, 0x003EE},
  {0x003F0, 0x0039A},
  {0x003F1, 0x003A1},
  {0x003F2, 0x003F9},
  {0x003F3, 0x0037F},
  {0x003F5, 0x00395},
  {0x003F8, 0x003F7},
  {0x003FB, 0x003FA},
  {0x00430, 0x00410},
  {0x00431, 0x00411},
  {0x00432, 0x00412},
  {0x00433, 0x00413},
  {0x00434, 0x00414},
  {0x00435, 0x00415},
  {0x00436, 0x00416},
  {0x00437, 0x00417},
  {0x00438, 0x00418},
  {0x00439, 0x00419},
  {0x0043A, 0x0041A},
  {0x0043B, 0x0041B},
  {0x0043C, 0x0041C},
  {0x0043D, 0x0041D},
  {0x0043E, 0x0041E},
  {0x0043F, 0x0041F},
  {0x00440, 0x00420},
  {0x00441, 0x00421},
  {0x00442, 0x00422},
  {0x00443, 0x00423},
  {0x00444, 0x00424},
  {0x00445, 0x00425},
  {0x00446, 0x00426},
  {0x00447, 0x00427},
  {0x00448, 0x00428},
  {0x00449, 0x00429},
  {0x0044A, 0x0042A},
  {0x0044B, 0x0042B},
  {0x0044C, 0x0042C},
  {0x0044D, 0x0042D},
  {0x0044E, 0x0042E},
  {0x0044F, 0x0042F},
  {0x00450, 0x00400},
  {0x00451, 0x00401},
  {0x00452, 0x00402},
  {0x00453, 0x00403},
  {0x00454, 0x00404},
  {0x00455, 0x00405},
  {0x00456, 0x00406},
  {0x00457, 0x00407},
  {0x00458, 0x00408},
  {0x00459, 0x00409},
  {0x0045A, 0x0040A},
  {0x0045B, 0x0040B},
  {0x0045C, 0x0040C},
  {0x0045D, 0x0040D},
  {0x0045E, 0x0040E},
  {0x0045F, 0x0040F},
  {0x00461, 0x00460},
  {0x00463, 0x00462},
  {0x00465, 0x00464},
  {0x00467, 0x00466},
  {0x00469, 0x00468},
  {0x0046B, 0x0046A},
  {0x0046D, 0x0046C},
  {0x0046F, 0x0046E},
  {0x00471, 0x00470},
  {0x00473, 0x00472},
  {0x00475, 0x00474},
  {0x00477, 0x00476},
  {0x00479, 0x00478},
  {0x0047B, 0x0047A},
  {0x0047D, 0x0047C},
  {0x0047F, 0x0047E},
  {0x00481, 0x00480},
  {0x0048B, 0x0048A},
  {0x0048D, 0x0048C},
  {0x0048F, 0x0048E},
  {0x00491, 0x00490},
  {0x00493, 0x00492},
  {0x00495, 0x00494},
  {0x00497, 0x00496},
  {0x00499, 0x00498},
  {0x0049B, 0x0049A},
  {0x0049D, 0x0049C},
  {0x0049F, 0x0049E},
  {0x004A1, 0x004A0},
  {0x004A3, 0x004A2},
  {0x004A5, 0x004A4},
  {0x004A7, 0x004A6},
  {0x004A9, 0x004A8},
  {0x004AB, 0x004AA},
  {0x004AD, 0x004AC},
  {0x004AF, 0x004AE},
  {0x004B1, 0x004B0},
  {0x004B3, 0x004B2},
  {0x004B5, 0x004B4},
  {0x004B7, 0x004B6},
  {0x004B9, 0x004B8},
  {0x004BB, 0x004BA},
  {0x004BD, 0x004BC},
  {0x004BF, 0x004BE},
  {0x004C2, 0x004C1},
  {0x004C4, 0x004C3},
  {0x004C6, 0x004C5},
  {0x004C8, 0x004C7},
  {0x004CA, 0x004C9},
  {0x004CC, 0x004CB},
  {0x004CE, 0x004CD},
  {0x004CF, 0x004C0},
  {0x004D1, 0x004D0},
  {0x004D3, 0x004D2},
  {0x004D5, 0x004D4},
  {0x004D7, 0x004D6},
  {0x004D9, 0x004D8},
  {0x004DB, 0x004DA},
  {0x004DD, 0x004DC},
  {0x004DF, 0x004DE},
  {0x004E1, 0x004E0},
  {0x004E3, 0x004E2},
  {0x004E5, 0x004E4},
  {0x004E7, 0x004E6},
  {0x004E9, 0x004E8},
  {0x004EB, 0x004EA},
  {0x004ED, 0x004EC},
  {0x004EF, 0x004EE},
  {0x004F1, 0x004F0},
  {0x004F3, 0x004F2},
  {0x004F5, 0x004F4},
  {0x004F7, 0x004F6},
  {0x004F9, 0x004F8},
  {0x004FB, 0x004FA},
  {0x004FD, 0x004FC},
  {0x004FF, 0x004FE},
  {0x00501, 0x00500},
  {0x00503, 0x00502},
  {0x00505, 0x00504},
  {0x00507, 0x00506},
  {0x00509, 0x00508},
  {0x0050B, 0x0050A},
  {0x0050D, 0x0050C},
  {0x0050F, 0x0050E},
  {0x00511, 0x00510},
  {0x00513, 0x00512},
  {0x00515, 0x00514},
  {0x00517, 0x00516},
  {0x00519, 0x00518},
  {0x0051B, 0x0051A},
  {0x0051D, 0x0051C},
  {0x0051F, 0x0051E},
  {0x00521, 0x00520},
  {0x00523, 0x00522},
  {0x00525, 0x00524},
  {0x00527, 0x00526},
  {0x00529, 0x00528},
  {0x0052B, 0x0052A},
  {0x0052D, 0x0052C},
  {0x0052F, 0x0052E},
  {0x00561, 0x00531},
  {0x00562, 0x00532},
  {0x00563, 0x00533},
  {0x00564, 0x00534},
  {0x00565, 0x00535},
  {0x00566, 0x00536},
  {0x00567, 0x00537},
  {0x00568, 0x00538},
  {0x00569, 0x00539},
  {0x0056A, 0x0053A},
  {0x0056B, 0x0053B},
  {0x0056C, 0x0053C},
  {0x0056D, 0x0053D},
  {0x0056E, 0x0053E},
  {0x0056F, 0x0053F},
  {0x00570, 0x00540},
  {0x00571, 0x00541},
  {0x00572, 0x00542},
  {0x00573, 0x00543},
  {0x00574, 0x00544},
  {0x00575, 0x00545},
  {0x00576, 0x00546},
  {0x00577, 0x00547},
  {0x00578, 0x00548},
  {0x00579, 0x00549},
  {0x0057A, 0x0054A},
  {0x0057B, 0x0054B},
  {0x0057C, 0x0054C},
  {0x0057D, 0x0054D},
  {0x0057E, 0x0054E},
  {0x0057F, 0x0054F},
  {0x00580, 0x00550},
  {0x00581, 0x00551},
  {0x00582, 0x00552},
  {0x00583, 0x00553},
  {0x00584, 0x00554},
  {0x00585, 0x00555},
  {0x00586, 0x00556},
  {0x010D0, 0x01C90},
  {0x010D1, 0x01C91},
  {0x010D2, 0x01C92},
  {0x010D3, 0x01C93},
  {0x010D4, 0x01C94},
  {0x010D5, 0x01C95},
  {0x010D6, 0x01C96},
  {0x010D7, 0x01C97},
  {0x010D8, 0x01C98},
  {0x010D9, 0x01C99},
  {0x010DA, 0x01C9A},
  {0x010DB, 0x01C9B},
  {0x010DC, 0x01C9C},
  {0x010DD, 0x01C9D},
  {0x010DE, 0x01C9E},
  {0x010DF, 0x01C9F},
  {0x010E0, 0x01CA0},
  {0x010E1, 0x01CA1},
  {0x010E2, 0x01CA2},
  {0x010E3, 0x01CA3},
  {0x010E4, 0x01CA4},
  {0x010E5, 0x01CA5},
  {0x010E6, 0x01CA6},
  {0x010E7, 0x01CA7},
  {0x010E8, 0x01CA8},
  {0x010E9, 0x01CA9},
  {0x010EA, 0x01CAA},
  {0x010EB, 0x01CAB},
  {0x010EC, 0x01CAC},
  {0x010ED, 0x01CAD},
  {0x010EE, 0x01CAE},
  {0x010EF, 0x01CAF},
  {0x010F0, 0x01CB0},
  {0x010F1, 0x01CB1},
  {0x010F2, 0x01CB2},
  {0x010F3, 0x01CB3},
  {0x010F4, 0x01CB4},
  {0x010F5, 0x01CB5},
  {0x010F6, 0x01CB6},
  {0x010F7, 0x01CB7},
  {0x010F8, 0x01CB8},
  {0x010F9, 0x01CB9},
  {0x010FA, 0x01CBA},
  {0x010FD, 0x01CBD},
  {0x010FE, 0x01CBE},
  {0x010FF, 0x01CBF},
  {0x013F8, 0x013F0},
  {0x013F9, 0x013F1},
  {0x013FA, 0x013F2},
  {0x013FB, 0x013F3},
  {0x013FC, 0x013F4},
  {0x013FD, 0x013F5},
  {0x01C80, 0x00412},
  {0x01C81, 0x00414},
  {0x01C82, 0x0041E},
  {0x01C83, 0x00421},
  {0x01C84, 0x00422},
  {0x01C85, 0x00422},
  {0x01C86, 0x0042A},
  {0x01C87, 0x00462},
  {0x01C88, 0x0A64A},
  {0x01D79, 0x0A77D},
  {0x01D7D, 0x02C63},
  {0x01D8E, 0x0A7C6},
  {0x01E01, 0x01E00},
  {0x01E03, 0x01E02},
  {0x01E05, 0x01E04},
  {0x01E07, 0x01E06},
  {0x01E09, 0x01E08},
  {0x01E0B, 0x01E0A},
  {0x01E0D, 0x01E0C},
  {0x01E0F, 0x01E0E},
  {0x01E11, 0x01E10},
  {0x01E13, 0x01E12},
  {0x01E15, 0x01E14},
  {0x01E17, 0x01E16},
  {0x01E19, 0x01E18},
  {0x01E1B, 0x01E1A},
  {0x01E1D, 0x01E1C},
  {0x01E1F, 0x01E1E},
  {0x01E21, 0x01E20},
  {0x01E23, 0x01E22},
  {0x01E25, 0x01E24},
  {0x01E27, 0x01E26},
  {0x01E29, 0x01E28},
  {0x01E2B, 0x01E2A},
  {0x01E2D, 0x01E2C},
  {0x01E2F, 0x01E2E},
  {0x01E31, 0x01E30},
  {0x01E33, 0x01E32},
  {0x01E35, 0x01E34},
  {0x01E37, 0x01E36},
  {0x01E39, 0x01E38},
  {0x01E3B, 0x01E3A},
  {0x01E3D, 0x01E3C},
  {0x01E3F, 0x01E3E},
  {0x01E41, 0x01E40},
  {0x01E43, 0x01E42},
  {0x01E45, 0x01E44},
  {0x01E47, 0x01E46},
  {0x01E49, 0x01E48},
  {0x01E4B, 0x01E4A},
  {0x01E4D, 0x01E4C},
  {0x01E4F, 0x01E4E},
  {0x01E51, 0x01E50},
  {0x01E53, 0x01E52},
  {0x01E55, 0x01E54},
  {0x01E57, 0x01E56},
  {0x01E59, 0x01E58},
  {0x01E5B, 0x01E5A},
  {0x01E5D, 0x01E5C},
  {0x01E5F, 0x01E5E},
  {0x01E61, 0x01E60},
  {0x01E63, 0x01E62},
  {0x01E65, 0x01E64},
  {0x01E67, 0x01E66},
  {0x01E69, 0x01E68},
  {0x01E6B, 0x01E6A},
  {0x01E6D, 0x01E6C},
  {0x01E6F, 0x01E6E},
  {0x01E71, 0x01E70},
  {0x01E73, 0x01E72},
  {0x01E75, 0x01E74},
  {0x01E77, 0x01E76},
  {0x01E79, 0x01E78},
  {0x01E7B, 0x01E7A},
  {0x01E7D, 0x01E7C},
  {0x01E7F, 0x01E7E},
  {0x01E81, 0x01E80},
  {0x01E83, 0x01E82},
  {0x01E85, 0x01E84},
  {0x01E87, 0x01E86},
  {0x01E89, 0x01E88},
  {0x01E8B, 0x01E8A},
  {0x01E8D, 0x01E8C},
  {0x01E8F, 0x01E8E},
  {0x01E91, 0x01E90},
  {0x01E93, 0x01E92},
  {0x01E95, 0x01E94},
  {0x01E9B, 0x01E60},
  {0x01EA1, 0x01EA0},
  {0x01EA3, 0x01EA2},
  {0x01EA5, 0x01EA4},
  {0x01EA7, 0x01EA6},
  {0x01EA9, 0x01EA8},
  {0x01EAB, 0x01EAA},
  {0x01EAD, 0x01EAC},
  {0x01EAF, 0x01EAE},
  {0x01EB1, 0x01EB0},
  {0x01EB3, 0x01EB2},
  {0x01EB5, 0x01EB4},
  {0x01EB7, 0x01EB6},
  {0x01EB9, 0x01EB8},
  {0x01EBB, 0x01EBA},
  {0x01EBD, 0x01EBC},
  {0x01EBF, 0x01EBE},
  {0x01EC1, 0x01EC0},
  {0x01EC3, 0x01EC2},
  {0x01EC5, 0x01EC4},
  {0x01EC7, 0x01EC6},
  {0x01EC9, 0x01EC8},
  {0x01ECB, 0x01ECA},
  {0x01ECD, 0x01ECC},
  {0x01ECF, 0x01ECE},
  {0x01ED1, 0x01ED0},
  {0x01ED3, 0x01ED2},
  {0x01ED5, 0x01ED4},
  {0x01ED7, 0x01ED6},
  {0x01ED9, 0x01ED8},
  {0x01EDB, 0x01EDA},
  {0x01EDD, 0x01EDC},
  {0x01EDF, 0x01EDE},
  {0x01EE1, 0x01EE0},
  {0x01EE3, 0x01EE2},
  {0x01EE5, 0x01EE4},
  {0x01EE7, 0x01EE6},
  {0x01EE9, 0x01EE8},
  {0x01EEB, 0x01EEA},
  {0x01EED, 0x01EEC},
  {0x01EEF, 0x01EEE},
  {0x01EF1, 0x01EF0},
  {0x01EF3, 0x01EF2},
  {0x01EF5, 0x01EF4},
  {0x01EF7, 0x01EF6},
  {0x01EF9, 0x01EF8},
  {0x01EFB, 0x01EFA},
  {0x01EFD, 0x01EFC},
  {0x01EFF, 0x01EFE},
  {0x01F00, 0x01F08},
  {0x01F01, 0x01F09},
  {0x01F02, 0x01F0A},
  {0x01F03, 0x01F0B},
  {0x01F04, 0x01F0C},
  {0x01F05, 0x01F0D},
  {0x01F06, 0x01F0E},
  {0x01F07, 0x01F0F},
  {0x01F10, 0x01F18},
  {0x01F11, 0x01F19},
  {0x01F12, 0x01F1A},
  {0x01F13, 0x01F1B},
  {0x01F14, 0x01F1C},
  {0x01F15, 0x01F1D},
  {0x01F20, 0x01F28},
  {0x01F21, 0x01F29},
  {0x01F22, 0x01F2A},
  {0x01F23, 0x01F2B},
  {0x01F24, 0x01F2C},
  {0x01F25, 0x01F2D},
  {0x01F26, 0x01F2E},
  {0x01F27, 0x01F2F},
  {0x01F30, 0x01F38},
  {0x01F31, 0x01F39},
  {0x01F32, 0x01F3A},
  {0x01F33, 0x01F3B},
  {0x01F34, 0x01F3C},
  {0x01F35, 0x01F3D},
  {0x01F36, 0x01F3E},
  {0x01F37, 0x01F3F},
  {0x01F40, 0x01F48},
  {0x01F41, 0x01F49},
  {0x01F42, 0x01F4A},
  {0x01F43, 0x01F4B},
  {0x01F44, 0x01F4C},
  {0x01F45, 0x01F4D},
  {0x01F51, 0x01F59},
  {0x01F53, 0x01F5B},
  {0x01F55, 0x01F5D},
  {0x01F57, 0x01F5F},
  {0x01F60, 0x01F68},
  {0x01F61, 0x01F69},
  {0x01F62, 0x01F6A},
  {0x01F63, 0x01F6B},
  {0x01F64, 0x01F6C},
  {0x01F65, 0x01F6D},
  {0x01F66, 0x01F6E},
  {0x01F67, 0x01F6F},
  {0x01F70, 0x01FBA},
  {0x01F71, 0x01FBB},
  {0x01F72, 0x01FC8},
  {0x01F73, 0x01FC9},
  {0x01F74, 0x01FCA},
  {0x01F75, 0x01FCB},
  {0x01F76, 0x01FDA},
  {0x01F77, 0x01FDB},
  {0x01F78, 0x01FF8},
  {0x01F79, 0x01FF9},
  {0x01F7A, 0x01FEA},
  {0x01F7B, 0x01FEB},
  {0x01F7C, 0x01FFA},
  {0x01F7D, 0x01FFB},
  {0x01FB0, 0x01FB8},
  {0x01FB1, 0x01FB9},
  {0x01FBE, 0x00399},
  {0x01FD0, 0x01FD8},
  {0x01FD1, 0x01FD9},
  {0x01FE0, 0x01FE8},
  {0x01FE1, 0x01FE9},
  {0x01FE5, 0x01FEC},
  {0x0214E, 0x02132},
  {0x02170, 0x02160},
  {0x02171, 0x02161},
  {0x02172, 0x02162},
  {0x02173, 0x02163},
  {0x02174, 0x02164},
  {0x02175, 0x02165},
  {0x02176, 0x02166},
  {0x02177, 0x02167},
  {0x02178, 0x02168},
  {0x02179, 0x02169},
  {0x0217A, 0x0216A},
  {0x0217B, 0x0216B},
  {0x0217C, 0x0216C},
  {0x0217D, 0x0216D},
  {0x0217E, 0x0216E},
  {0x0217F, 0x0216F},
  {0x02184, 0x02183},
  {0x024D0, 0x024B6},
  {0x024D1, 0x024B7},
  {0x024D2, 0x024B8},
  {0x024D3, 0x024B9},
  {0x024D4, 0x024BA},
  {0x024D5, 0x024BB},
  {0x024D6, 0x024BC},
  {0x024D7, 0x024BD},
  {0x024D8, 0x024BE},
  {0x024D9, 0x024BF},
  {0x024DA, 0x024C0},
  {0x024DB, 0x024C1},
  {0x024DC, 0x024C2},
  {0x024DD, 0x024C3},
  {0x024DE, 0x024C4},
  {0x024DF, 0x024C5},
  {0x024E0, 0x024C6},
  {0x024E1, 0x024C7},
  {0x024E2, 0x024C8},
  {0x024E3, 0x024C9},
  {0x024E4, 0x024CA},
  {0x024E5, 0x024CB},
  {0x024E6, 0x024CC},
  {0x024E7, 0x024CD},
  {0x024E8, 0x024CE},
  {0x024E9, 0x024CF},
  {0x02C30, 0x02C00},
  {0x02C31, 0x02C01},
  {0x02C32, 0x02C02},
  {0x02C33, 0x02C03},
  {0x02C34, 0x02C04},
  {0x02C35, 0x02C05},
  {0x02C36, 0x02C06},
  {0x02C37, 0x02C07},
  {0x02C38, 0x02C08},
  {0x02C39, 0x02C09},
  {0x02C3A, 0x02C0A},
  {0x02C3B, 0x02C0B},
  {0x02C3C, 0x02C0C},
  {0x02C3D, 0x02C0D},
  {0x02C3E, 0x02C0E},
  {0x02C3F, 0x02C0F},
  {0x02C40, 0x02C10},
  {0x02C41, 0x02C11},
  {0x02C42, 0x02C12},
  {0x02C43, 0x02C13},
  {0x02C44, 0x02C14},
  {0x02C45, 0x02C15},
  {0x02C46, 0x02C16},
  {0x02C47, 0x02C17},
  {0x02C48, 0x02C18},
  {0x02C49, 0x02C19},
  {0x02C4A, 0x02C1A},
  {0x02C4B, 0x02C1B},
  {0x02C4C, 0x02C1C},
  {0x02C4D, 0x02C1D},
  {0x02C4E, 0x02C1E},
  {0x02C4F, 0x02C1F},
  {0x02C50, 0x02C20},
  {0x02C51, 0x02C21},
  {0x02C52, 0x02C22},
  {0x02C53, 0x02C23},
  {0x02C54, 0x02C24},
  {0x02C55, 0x02C25},
  {0x02C56, 0x02C26},
  {0x02C57, 0x02C27},
  {0x02C58, 0x02C28},
  {0x02C59, 0x02C29},
  {0x02C5A, 0x02C2A},
  {0x02C5B, 0x02C2B},
  {0x02C5C, 0x02C2C},
  {0x02C5D, 0x02C2D},
  {0x02C5E, 0x02C2E},
  {0x02C61, 0x02C60},
  {0x02C65, 0x0023A},
  {0x02C66, 0x0023E},
  {0x02C68, 0x02C67},
  {0x02C6A, 0x02C69},
  {0x02C6C, 0x02C6B},
  {0x02C73, 0x02C72},
  {0x02C76, 0x02C75},
  {0x02C81, 0x02C80},
  {0x02C83, 0x02C82},
  {0x02C85, 0x02C84},
  {0x02C87, 0x02C86},
  {0x02C89, 0x02C88},
  {0x02C8B, 0x02C8A},
  {0x02C8D, 0x02C8C},
  {0x02C8F, 0x02C8E},
  {0x02C91, 0x02C90},
  {0x02C93, 0x02C92},
  {0x02C95, 0x02C94},
  {0x02C97, 0x02C96},
  {0x02C99, 0x02C98},
  {0x02C9B, 0x02C9A},
  {0x02C9D, 0x02C9C},
  {0x02C9F, 0x02C9E},
  {0x02CA1, 0x02CA0},
  {0x02CA3, 0x02CA2},
  {0x02CA5, 0x02CA4},
  {0x02CA7, 0x02CA6},
  {0x02CA9, 0x02CA8},
  {0x02CAB, 0x02CAA},
  {0x02CAD, 0x02CAC},
  {0x02CAF, 0x02CAE},
  {0x02CB1, 0x02CB0},
  {0x02CB3, 0x02CB2},
  {0x02CB5, 0x02CB4},
  {0x02CB7, 0x02CB6},
  {0x02CB9, 0x02CB8},
  {0x02CBB, 0x02CBA},
  {0x02CBD, 0x02CBC},
  {0x02CBF, 0x02CBE},
  {0x02CC1, 0x02CC0},
  {0x02CC3, 0x02CC2},
  {0x02CC5, 0x02CC4},
  {0x02CC7, 0x02CC6},
  {0x02CC9, 0x02CC8},
  {0x02CCB, 0x02CCA},
  {0x02CCD, 0x02CCC},
  {0x02CCF, 0x02CCE},
  {0x02CD1, 0x02CD0},
  {0x02CD3, 0x02CD2},
  {0x02CD5, 0x02CD4},
  {0x02CD7, 0x02CD6},
  {0x02CD9, 0x02CD8},
  {0x02CDB, 0x02CDA},
  {0x02CDD, 0x02CDC},
  {0x02CDF, 0x02CDE},
  {0x02CE1, 0x02CE0},
  {0x02CE3, 0x02CE2},
  {0x02CEC, 0x02CEB},
  {0x02CEE, 0x02CED},
  {0x02CF3, 0x02CF2},
  {0x02D00, 0x010A0},
  {0x02D01, 0x010A1},
  {0x02D02, 0x010A2},
  {0x02D03, 0x010A3},
  {0x02D04, 0x010A4},
  {0x02D05, 0x010A5},
  {0x02D06, 0x010A6},
  {0x02D07, 0x010A7},
  {0x02D08, 0x010A8},
  {0x02D09, 0x010A9},
  {0x02D0A, 0x010AA},
  {0x02D0B, 0x010AB},
  {0x02D0C, 0x010AC},
  {0x02D0D, 0x010AD},
  {0x02D0E, 0x010AE},
  {0x02D0F, 0x010AF},
  {0x02D10, 0x010B0},
  {0x02D11, 0x010B1},
  {0x02D12, 0x010B2},
  {0x02D13, 0x010B3},
  {0x02D14, 0x010B4},
  {0x02D15, 0x010B5},
  {0x02D16, 0x010B6},
  {0x02D17, 0x010B7},
  {0x02D18, 0x010B8},
  {0x02D19, 0x010B9},
  {0x02D1A, 0x010BA},
  {0x02D1B, 0x010BB},
  {0x02D1C, 0x010BC},
  {0x02D1D, 0x010BD},
  {0x02D1E, 0x010BE},
  {0x02D1F, 0x010BF},
  {0x02D20, 0x010C0},
  {0x02D21, 0x010C1},
  {0x02D22, 0x010C2},
  {0x02D23, 0x010C3},
  {0x02D24, 0x010C4},
  {0x02D25, 0x010C5},
  {0x02D27, 0x010C7},
  {0x02D2D, 0x010CD},
  {0x0A641, 0x0A640},
  {0x0A643, 0x0A642},
  {0x0A645, 0x0A644},
  {0x0A647, 0x0A646},
  {0x0A649, 0x0A648},
  {0x0A64B, 0x0A64A},
  {0x0A64D, 0x0A64C},
  {0x0A64F, 0x0A64E},
  {0x0A651, 0x0A650},
  {0x0A653, 0x0A652},
  {0x0A655, 0x0A654},
  {0x0A657, 0x0A656},
  {0x0A659, 0x0A658},
  {0x0A65B, 0x0A65A},
  {0x0A65D, 0x0A65C},
  {0x0A65F, 0x0A65E},
  {0x0A661, 0x0A660},
  {0x0A663, 0x0A662},
  {0x0A665, 0x0A664},
  {0x0A667, 0x0A666},
  {0x0A669, 0x0A668},
  {0x0A66B, 0x0A66A},
  {0x0A66D, 0x0A66C},
  {0x0A681, 0x0A680},
  {0x0A683, 0x0A682},
  {0x0A685, 0x0A684},
  {0x0A687, 0x0A686},
  {0x0A689, 0x0A688},
  {0x0A68B, 0x0A68A},
  {0x0A68D, 0x0A68C},
  {0x0A68F, 0x0A68E},
  {0x0A691, 0x0A690},
  {0x0A693, 0x0A692},
  {0x0A695, 0x0A694},
  {0x0A697, 0x0A696},
  {0x0A699, 0x0A698},
  {0x0A69B, 0x0A69A},
  {0x0A723, 0x0A722},
  {0x0A725, 0x0A724},
  {0x0A727, 0x0A726},
  {0x0A729, 0x0A728},
  {0x0A72B, 0x0A72A},
  {0x0A72D, 0x0A72C},
  {0x0A72F, 0x0A72E},
  {0x0A733, 0x0A732},
  {0x0A735, 0x0A734},
  {0x0A737, 0x0A736},
  {0x0A739, 0x0A738},
  {0x0A73B, 0x0A73A},
  {0x0A73D, 0x0A73C},
  {0x0A73F, 0x0A73E},
  {0x0A741, 0x0A740},
  {0x0A743, 0x0A742},
  {0x0A745, 0x0A744},
  {0x0A747, 0x0A746},
  {0x0A749, 0x0A748},
  {0x0A74B, 0x0A74A},
  {0x0A74D, 0x0A74C},
  {0x0A74F, 0x0A74E},
  {0x0A751, 0x0A750},
  {0x0A753, 0x0A752},
  {0x0A755, 0x0A754},
  {0x0A757, 0x0A756},
  {0x0A759, 0x0A758},
  {0x0A75B, 0x0A75A},
  {0x0A75D, 0x0A75C},
  {0x0A75F, 0x0A75E},
  {0x0A761, 0x0A760},
  {0x0A763, 0x0A762},
  {0x0A765, 0x0A764},
  {0x0A767, 0x0A766},
  {0x0A769, 0x0A768},
  {0x0A76B, 0x0A76A},
  {0x0A76D, 0x0A76C},
  {0x0A76F, 0x0A76E},
  {0x0A77A, 0x0A779},
  {0x0A77C, 0x0A77B},
  {0x0A77F, 0x0A77E},
  {0x0A781, 0x0A780},
  {0x0A783, 0x0A782},
  {0x0A785, 0x0A784},
  {0x0A787, 0x0A786},
  {0x0A78C, 0x0A78B},
  {0x0A791, 0x0A790},
  {0x0A793, 0x0A792},
  {0x0A794, 0x0A7C4},
  {0x0A797, 0x0A796},
  {0x0A799, 0x0A798},
  {0x0A79B, 0x0A79A},
  {0x0A79D, 0x0A79C},
  {0x0A79F, 0x0A79E},
  {0x0A7A1, 0x0A7A0},
  {0x0A7A3, 0x0A7A2},
  {0x0A7A5, 0x0A7A4},
  {0x0A7A7, 0x0A7A6},
  {0x0A7A9, 0x0A7A8},
  {0x0A7B5, 0x0A7B4},
  {0x0A7B7, 0x0A7B6},
  {0x0A7B9, 0x0A7B8},
  {0x0A7BB, 0x0A7BA},
  {0x0A7BD, 0x0A7BC},
  {0x0A7BF, 0x0A7BE},
  {0x0A7C3, 0x0A7C2},
  {0x0A7C8, 0x0A7C7},
  {0x0A7CA, 0x0A7C9},
  {0x0A7F6, 0x0A7F5},
  {0x0AB53, 0x0A7B3},
  {0x0AB70, 0x013A0},
  {0x0AB71, 0x013A1},
  {0x0AB72, 0x013A2},
  {0x0AB73, 0x013A3},
  {0x0AB74, 0x013A4},
  {0x0AB75, 0x013A5},
  {0x0AB76, 0x013A6},
  {0x0AB77, 0x013A7},
  {0x0AB78, 0x013A8},
  {0x0AB79, 0x013A9},
  {0x0AB7A, 0x013AA},
  {0x0AB7B, 0x013AB},
  {0x0AB7C, 0x013AC},
  {0x0AB7D, 0x013AD},
  {0x0AB7E, 0x013AE},
  {0x0AB7F, 0x013AF},
  {0x0AB80, 0x013B0},
  {0x0AB81, 0x013B1},
  {0x0AB82, 0x013B2},
  {0x0AB83, 0x013B3},
  {0x0AB84, 0x013B4},
  {0x0AB85, 0x013B5},
  {0x0AB86, 0x013B6},
  {0x0AB87, 0x013B7},
  {0x0AB88, 0x013B8},
  {0x0AB89, 0x013B9},
  {0x0AB8A, 0x013BA},
  {0x0AB8B, 0x013BB},
  {0x0AB8C, 0x013BC},
  {0x0AB8D, 0x013BD},
  {0x0AB8E, 0x013BE},
  {0x0AB8F, 0x013BF},
  {0x0AB90, 0x013C0},
  {0x0AB91, 0x013C1},
  {0x0AB92, 0x013C2},
  {0x0AB93, 0x013C3},
  {0x0AB94, 0x013C4},
  {0x0AB95, 0x013C5},
  {0x0AB96, 0x013C6},
  {0x0AB97, 0x013C7},
  {0x0AB98, 0x013C8},
  {0x0AB99, 0x013C9},
  {0x0AB9A, 0x013CA},
  {0x0AB9B, 0x013CB},
  {0x0AB9C, 0x013CC},
  {0x0AB9D, 0x013CD},
  {0x0AB9E, 0x013CE},
  {0x0AB9F, 0x013CF},
  {0x0ABA0, 0x013D0},
  {0x0ABA1, 0x013D1},
  {0x0ABA2, 0x013D2},
  {0x0ABA3, 0x013D3},
  {0x0ABA4, 0x013D4},
  {0x0ABA5, 0x013D5},
  {0x0ABA6, 0x013D6},
  {0x0ABA7, 0x013D7},
  {0x0ABA8, 0x013D8},
  {0x0ABA9, 0x013D9},
  {0x0ABAA, 0x013DA},
  {0x0ABAB, 0x013DB},
  {0x0ABAC, 0x013DC},
  {0x0ABAD, 0x013DD},
  {0x0ABAE, 0x013DE},
  {0x0ABAF, 0x013DF},
  {0x0ABB0, 0x013E0},
  {0x0ABB1, 0x013E1},
  {0x0ABB2, 0x013E2},
  {0x0ABB3, 0x013E3},
  {0x0ABB4, 0x013E4},
  {0x0ABB5, 0x013E5},
  {0x0ABB6, 0x013E6},
  {0x0ABB7, 0x013E7},
  {0x0ABB8, 0x013E8},
  {0x0ABB9, 0x013E9},
  {0x0ABBA, 0x013EA},
  {0x0ABBB, 0x013EB},
  {0x0ABBC, 0x013EC},
  {0x0ABBD, 0x013ED},
  {0x0ABBE, 0x013EE},
  {0x0ABBF, 0x013EF},
  {0x0FF41, 0x0FF21},
  {0x0FF42, 0x0FF22},
  {0x0FF43, 0x0FF23},
  {0x0FF44, 0x0FF24},
  {0x0FF45, 0x0FF25},
  {0x0FF46, 0x0FF26},
  {0x0FF47, 0x0FF27},
  {0x0FF48, 0x0FF28},
  {0x0FF49, 0x0FF29},
  {0x0FF4A, 0x0FF2A},
  {0x0FF4B, 0x0FF2B},
  {0x0FF4C, 0x0FF2C},
  {0x0FF4D, 0x0FF2D},
  {0x0FF4E, 0x0FF2E},
  {0x0FF4F, 0x0FF2F},
  {0x0FF50, 0x0FF30},
  {0x0FF51, 0x0FF31},
  {0x0FF52, 0x0FF32},
  {0x0FF53, 0x0FF33},
  {0x0FF54, 0x0FF34},
  {0x0FF55, 0x0FF35},
  {0x0FF56, 0x0FF36},
  {0x0FF57, 0x0FF37},
  {0x0FF58, 0x0FF38},
  {0x0FF59, 0x0FF39},
  {0x0FF5A, 0x0FF3A},
  {0x10428, 0x10400},
  {0x10429, 0x10401},
  {0x1042A, 0x10402},
  {0x1042B, 0x10403},
  {0x1042C, 0x10404},
  {0x1042D, 0x10405},
  {0x1042E, 0x10406},
  {0x1042F, 0x10407},
  {0x10430, 0x10408},
  {0x10431, 0x10409},
  {0x10432, 0x1040A},
  {0x10433, 0x1040B},
  {0x10434, 0x1040C},
  {0x10435, 0x1040D},
  {0x10436, 0x1040E},
  {0x10437, 0x1040F},
  {0x10438, 0x10410},
  {0x10439, 0x10411},
  {0x1043A, 0x10412},
  {0x1043B, 0x10413},
  {0x1043C, 0x10414},
  {0x1043D, 0x10415},
  {0x1043E, 0x10416},
  {0x1043F, 0x10417},
  {0x10440, 0x10418},
  {0x10441, 0x10419},
  {0x10442, 0x1041A},
  {0x10443, 0x1041B},
  {0x10444, 0x1041C},
  {0x10445, 0x1041D},
  {0x10446, 0x1041E},
  {0x10447, 0x1041F},
  {0x10448, 0x10420},
  {0x10449, 0x10421},
  {0x1044A, 0x10422},
  {0x1044B, 0x10423},
  {0x1044C, 0x10424},
  {0x1044D, 0x10425},
  {0x1044E, 0x10426},
  {0x1044F, 0x10427},
  {0x104D8, 0x104B0},
  {0x104D9, 0x104B1},
  {0x104DA, 0x104B2},
  {0x104DB, 0x104B3},
  {0x104DC, 0x104B4},
  {0x104DD, 0x104B5},
  {0x104DE, 0x104B6},
  {0x104DF, 0x104B7},
  {0x104E0, 0x104B8},
  {0x104E1, 0x104B9},
  {0x104E2, 0x104BA},
  {0x104E3, 0x104BB},
  {0x104E4, 0x104BC},
  {0x104E5, 0x104BD},
  {0x104E6, 0x104BE},
  {0x104E7, 0x104BF},
  {0x104E8, 0x104C0},
  {0x104E9, 0x104C1},
  {0x104EA, 0x104C2},
  {0x104EB, 0x104C3},
  {0x104EC, 0x104C4},
  {0x104ED, 0x104C5},
  {0x104EE, 0x104C6},
  {0x104EF, 0x104C7},
  {0x104F0, 0x104C8},
  {0x104F1, 0x104C9},
  {0x104F2, 0x104CA},
  {0x104F3, 0x104CB},
  {0x104F4, 0x104CC},
  {0x104F5, 0x104CD},
  {0x104F6, 0x104CE},
  {0x104F7, 0x104CF},
  {0x104F8, 0x104D0},
  {0x104F9, 0x104D1},
  {0x104FA, 0x104D2},
  {0x104FB, 0x104D3},
  {0x10CC0, 0x10C80},
  {0x10CC1, 0x10C81},
  {0x10CC2, 0x10C82},
  {0x10CC3, 0x10C83},
  {0x10CC4, 0x10C84},
  {0x10CC5, 0x10C85},
  {0x10CC6, 0x10C86},
  {0x10CC7, 0x10C87},
  {0x10CC8, 0x10C88},
  {0x10CC9, 0x10C89},
  {0x10CCA, 0x10C8A},
  {0x10CCB, 0x10C8B},
  {0x10CCC, 0x10C8C},
  {0x10CCD, 0x10C8D},
  {0x10CCE, 0x10C8E},
  {0x10CCF, 0x10C8F},
  {0x10CD0, 0x10C90},
  {0x10CD1, 0x10C91},
  {0x10CD2, 0x10C92},
  {0x10CD3, 0x10C93},
  {0x10CD4, 0x10C94},
  {0x10CD5, 0x10C95},
  {0x10CD6, 0x10C96},
  {0x10CD7, 0x10C97},
  {0x10CD8, 0x10C98},
  {0x10CD9, 0x10C99},
  {0x10CDA, 0x10C9A},
  {0x10CDB, 0x10C9B},
  {0x10CDC, 0x10C9C},
  {0x10CDD, 0x10C9D},
  {0x10CDE, 0x10C9E},
  {0x10CDF, 0x10C9F},
  {0x10CE0, 0x10CA0},
  {0x10CE1, 0x10CA1},
  {0x10CE2, 0x10CA2},
  {0x10CE3, 0x10CA3},
  {0x10CE4, 0x10CA4},
  {0x10CE5, 0x10CA5},
  {0x10CE6, 0x10CA6},
  {0x10CE7, 0x10CA7},
  {0x10CE8, 0x10CA8},
  {0x10CE9, 0x10CA9},
  {0x10CEA, 0x10CAA},
  {0x10CEB, 0x10CAB},
  {0x10CEC, 0x10CAC},
  {0x10CED, 0x10CAD},
  {0x10CEE, 0x10CAE},
  {0x10CEF, 0x10CAF},
  {0x10CF0, 0x10CB0},
  {0x10CF1, 0x10CB1},
  {0x10CF2, 0x10CB2},
  {0x118C0, 0x118A0},
  {0x118C1, 0x118A1},
  {0x118C2, 0x118A2},
  {0x118C3, 0x118A3},
  {0x118C4, 0x118A4},
  {0x118C5, 0x118A5},
  {0x118C6, 0x118A6},
  {0x118C7, 0x118A7},
  {0x118C8, 0x118A8},
  {0x118C9, 0x118A9},
  {0x118CA, 0x118AA},
  {0x118CB, 0x118AB},
  {0x118CC, 0x118AC},
  {0x118CD, 0x118AD},
  {0x118CE, 0x118AE},
  {0x118CF, 0x118AF},
  {0x118D0, 0x118B0},
  {0x118D1, 0x118B1},
  {0x118D2, 0x118B2},
  {0x118D3, 0x118B3},
  {0x118D4, 0x118B4},
  {0x118D5, 0x118B5},
  {0x118D6, 0x118B6},
  {0x118D7, 0x118B7},
  {0x118D8, 0x118B8},
  {0x118D9, 0x118B9},
  {0x118DA, 0x118BA},
  {0x118DB, 0x118BB},
  {0x118DC, 0x118BC},
  {0x118DD, 0x118BD},
  {0x118DE, 0x118BE},
  {0x118DF, 0x118BF},
  {0x16E60, 0x16E40},
  {0x16E61, 0x16E41},
  {0x16E62, 0x16E42},
  {0x16E63, 0x16E43},
  {0x16E64, 0x16E44},
  {0x16E65, 0x16E45},
  {0x16E66, 0x16E46},
  {0x16E67, 0x16E47},
  {0x16E68, 0x16E48},
  {0x16E69, 0x16E49},
  {0x16E6A, 0x16E4A},
  {0x16E6B, 0x16E4B},
  {0x16E6C, 0x16E4C},
  {0x16E6D, 0x16E4D},
  {0x16E6E, 0x16E4E},
  {0x16E6F, 0x16E4F},
  {0x16E70, 0x16E50},
  {0x16E71, 0x16E51},
  {0x16E72, 0x16E52},
  {0x16E73, 0x16E53},
  {0x16E74, 0x16E54},
  {0x16E75, 0x16E55},
  {0x16E76, 0x16E56},
  {0x16E77, 0x16E57},
  {0x16E78, 0x16E58},
  {0x16E79, 0x16E59},
  {0x16E7A, 0x16E5A},
  {0x16E7B, 0x16E5B},
  {0x16E7C, 0x16E5C},
  {0x16E7D, 0x16E5D},
  {0x16E7E, 0x16E5E},
  {0x16E7F, 0x16E5F},
  {0x1E922, 0x1E900},
  {0x1E923, 0x1E901},
  {0x1E924, 0x1E902},
  {0x1E925, 0x1E903},
  {0x1E926, 0x1E904},
  {0x1E927, 0x1E905},
  {0x1E928, 0x1E906},
  {0x1E929, 0x1E907},
  {0x1E92A, 0x1E908},
  {0x1E92B, 0x1E909},
  {0x1E92C, 0x1E90A},
  {0x1E92D, 0x1E90B},
  {0x1E92E, 0x1E90C},
  {0x1E92F, 0x1E90D},
  {0x1E930, 0x1E90E},
  {0x1E931, 0x1E90F},
  {0x1E932, 0x1E910},
  {0x1E933, 0x1E911},
  {0x1E934, 0x1E912},
  {0x1E935, 0x1E913},
  {0x1E936, 0x1E914},
  {0x1E937, 0x1E915},
  {0x1E938, 0x1E916},
  {0x1E939, 0x1E917},
  {0x1E93A, 0x1E918},
  {0x1E93B, 0x1E919},
  {0x1E93C, 0x1E91A},
  {0x1E93D, 0x1E91B},
  {0x1E93E, 0x1E91C},
  {0x1E93F, 0x1E91D},
  {0x1E940, 0x1E91E},
  {0x1E941, 0x1E91F},
  {0x1E942, 0x1E920},
  {0x1E943, 0x1E921},
};
const std::size_t simple_uppercase_count = 1383;

}  // namespace rnck::unicode
