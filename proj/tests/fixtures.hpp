#pragma once

// Encoded with Pillow, an encoder independent of this library.

#include <cstdint>
#include <vector>

namespace fixtures {

// 2x2 RGB: (255,0,0) (0,255,0) / (0,0,255) (10,20,30)
inline const std::vector<std::uint8_t> kRgbPng = {
    0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D,
    0x49, 0x48, 0x44, 0x52, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
    0x08, 0x02, 0x00, 0x00, 0x00, 0xFD, 0xD4, 0x9A, 0x73, 0x00, 0x00, 0x00,
    0x16, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9C, 0x63, 0xF8, 0xCF, 0xC0, 0xC0,
    0xF0, 0x9F, 0x81, 0x81, 0x81, 0xE1, 0x3F, 0x97, 0x88, 0x1C, 0x00, 0x1A,
    0x58, 0x03, 0x3A, 0x82, 0xE0, 0xAB, 0x53, 0x00, 0x00, 0x00, 0x00, 0x49,
    0x45, 0x4E, 0x44, 0xAE, 0x42, 0x60, 0x82,
};

// 2x2 gray: 0 127 / 128 255
inline const std::vector<std::uint8_t> kGrayPng = {
    0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D,
    0x49, 0x48, 0x44, 0x52, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
    0x08, 0x00, 0x00, 0x00, 0x00, 0x57, 0xDD, 0x52, 0xF8, 0x00, 0x00, 0x00,
    0x0E, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9C, 0x63, 0x60, 0xA8, 0x67, 0x68,
    0xF8, 0x0F, 0x00, 0x04, 0x01, 0x01, 0xFF, 0x4A, 0x2C, 0x44, 0xC5, 0x00,
    0x00, 0x00, 0x00, 0x49, 0x45, 0x4E, 0x44, 0xAE, 0x42, 0x60, 0x82,
};

// 2x1 RGBA: (1,2,3,a0) (200,100,50,a128)
inline const std::vector<std::uint8_t> kRgbaPng = {
    0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D,
    0x49, 0x48, 0x44, 0x52, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x01,
    0x08, 0x06, 0x00, 0x00, 0x00, 0xF4, 0x22, 0x7F, 0x8A, 0x00, 0x00, 0x00,
    0x11, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9C, 0x63, 0x64, 0x64, 0x62, 0x66,
    0x38, 0x9E, 0xA4, 0xDF, 0x00, 0x00, 0x05, 0x5A, 0x01, 0xE0, 0x7F, 0x83,
    0x27, 0xC7, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4E, 0x44, 0xAE, 0x42,
    0x60, 0x82,
};

// 3x2 24-bit BMP: (1,2,3) (4,5,6) (7,8,9) / (250,251,252) (0,128,255) (9,9,9)
inline const std::vector<std::uint8_t> kRgbBmp = {
    0x42, 0x4D, 0x4E, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x36, 0x00,
    0x00, 0x00, 0x28, 0x00, 0x00, 0x00, 0x03, 0x00, 0x00, 0x00, 0x02, 0x00,
    0x00, 0x00, 0x01, 0x00, 0x18, 0x00, 0x00, 0x00, 0x00, 0x00, 0x18, 0x00,
    0x00, 0x00, 0xC4, 0x0E, 0x00, 0x00, 0xC4, 0x0E, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xFC, 0xFB, 0xFA, 0xFF, 0x80, 0x00,
    0x09, 0x09, 0x09, 0x00, 0x00, 0x00, 0x03, 0x02, 0x01, 0x06, 0x05, 0x04,
    0x09, 0x08, 0x07, 0x00, 0x00, 0x00,
};

}  // namespace fixtures
